#include "risradar/ris.hpp"

#include <cmath>

#include "risradar/error.hpp"

namespace risradar {

RisPhaseProgram align_phases(const ChannelPhases& phases, SpacingRegime regime) {
    if (regime == SpacingRegime::Indeterminate) {
        throw UnsupportedError("RIS alignment is undefined in the indeterminate spacing regime");
    }
    const std::vector<double>& known = regime == SpacingRegime::Closely ? phases.psi_t_prime : phases.psi_t_dprime;
    if (known.size() != phases.psi_r.size()) {
        throw ConfigError("phase decomposition lists differ in length");
    }
    RisPhaseProgram program;
    program.regime = regime;
    program.phi.resize(known.size());
    for (std::size_t l = 0; l < known.size(); ++l) {
        program.phi[l] = wrap_phase(-known[l] - phases.psi_r[l]);
    }
    return program;
}

RisPhaseProgram quantize(const RisPhaseProgram& program, unsigned bits) {
    if (bits == 0 || bits > 30) {
        throw ConfigError("quantizer resolution must be 1..30 bits");
    }
    const double levels = std::ldexp(1.0, static_cast<int>(bits));
    const double step = kTwoPi / levels;
    RisPhaseProgram out = program;
    for (double& p : out.phi) {
        p = wrap_phase(std::round(p / step) * step);
    }
    return out;
}

std::complex<double> coherent_sum(std::span<const double> amplitudes, std::span<const double> psi_t,
                                  std::span<const double> phi, std::span<const double> psi_r) {
    const std::size_t n = amplitudes.size();
    if (psi_t.size() != n || phi.size() != n || psi_r.size() != n) {
        throw ConfigError("coherent_sum: list lengths differ");
    }
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) {
        sum += std::polar(amplitudes[l], psi_t[l] + phi[l] + psi_r[l]);
    }
    return sum;
}

}  // namespace risradar

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "risradar/channel.hpp"
#include "risradar/geometry.hpp"

namespace risradar {

struct RisPhaseProgram {
    std::vector<double> phi;  // [0, 2pi)
    SpacingRegime regime = SpacingRegime::Indeterminate;
};

// phi_l = -(known target phase)_l - psi_r,l (mod 2pi). Throws UnsupportedError
// in the indeterminate regime.
RisPhaseProgram align_phases(const ChannelPhases& phases, SpacingRegime regime);

// Rounds each phase to the nearest of 2^bits uniform levels.
RisPhaseProgram quantize(const RisPhaseProgram& program, unsigned bits);

// sum_l amplitude_l * exp(i (psi_t,l + phi_l + psi_r,l)), without the common
// target factor sqrt(sigma) e^{i beta}.
std::complex<double> coherent_sum(std::span<const double> amplitudes, std::span<const double> psi_t,
                                  std::span<const double> phi, std::span<const double> psi_r);

}  // namespace risradar

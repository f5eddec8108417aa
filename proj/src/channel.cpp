#include "risradar/channel.hpp"

#include <cmath>
#include <numeric>

#include "risradar/error.hpp"

namespace risradar {

namespace {

constexpr double kFourPi = 4.0 * kPi;

bool front_facing(const AzEl& a) {
    return std::abs(a.azimuth) < kPi / 2.0 && std::abs(a.elevation) < kPi / 2.0;
}

}  // namespace

RadarAntennas make_radar_antennas(const Scene& scene) {
    const ScenarioGeometry& g = scene.geometry;
    return {
        SquareArrayAntenna(g.radar_aperture_target, g.wavelength,
                           Frame::from_normal(g.target_position - g.radar_position)),
        SquareArrayAntenna(g.radar_aperture_ris, g.wavelength, Frame::from_normal(g.ris_center - g.radar_position)),
    };
}

double element_rcs_model(double wavelength, const AzEl& target_incidence, const AzEl& radar_incidence) {
    if (!front_facing(target_incidence) || !front_facing(radar_incidence)) {
        return 0.0;
    }
    const double half = wavelength / 2.0;
    return kPi * half * half * std::cos(target_incidence.azimuth) * std::cos(target_incidence.elevation) *
           std::cos(radar_incidence.azimuth) * std::cos(radar_incidence.elevation);
}

ElementRcs element_rcs(const Scene& scene, std::size_t element) {
    if (element >= scene.derived.angles_radar_l.size()) {
        throw ConfigError("element index out of range");
    }
    const double s = element_rcs_model(scene.geometry.wavelength, scene.derived.angles_target,
                                       scene.derived.angles_radar_l[element]);
    return {s, s};
}

double direct_amplitude(double transmit_power, double gain_target, double wavelength, double rho) {
    if (!(rho > 0.0)) {
        throw DomainError("radar-target distance must be positive");
    }
    const double rho2 = rho * rho;
    return std::sqrt(transmit_power * gain_target * gain_target * wavelength * wavelength /
                     (kFourPi * kFourPi * kFourPi * rho2 * rho2));
}

double indirect_amplitude(double transmit_power, double gain_target, double gain_ris_element, double wavelength,
                          double element_rcs, double rho, double d_t, double d_r_element) {
    if (!(rho > 0.0) || !(d_t > 0.0) || !(d_r_element > 0.0)) {
        throw DomainError("link distances must be positive");
    }
    const double four_pi_sq = kFourPi * kFourPi;
    return std::sqrt(transmit_power * gain_target * gain_ris_element * wavelength * wavelength * element_rcs /
                     (four_pi_sq * four_pi_sq * rho * rho * d_t * d_t * d_r_element * d_r_element));
}

double LinkBudget::alpha_sr_sum() const {
    return std::accumulate(alpha_sr.begin(), alpha_sr.end(), 0.0);
}

double LinkBudget::alpha_st_sum() const {
    return std::accumulate(alpha_st.begin(), alpha_st.end(), 0.0);
}

LinkBudget compute_link_budget(const Scene& scene, const RadarAntennas& antennas, double transmit_power,
                               double noise_power) {
    if (!(transmit_power > 0.0) || !(noise_power > 0.0)) {
        throw ConfigError("transmit and noise power must be positive");
    }
    const ScenarioGeometry& g = scene.geometry;
    const DerivedGeometry& d = scene.derived;
    const std::size_t count = g.element_count();

    LinkBudget lb;
    lb.transmit_power = transmit_power;
    lb.noise_power = noise_power;
    lb.gain_target = antennas.toward_target.gain_toward(g.target_position - g.radar_position);
    lb.alpha = direct_amplitude(transmit_power, lb.gain_target, g.wavelength, d.rho);
    lb.alpha_sr.resize(count);
    lb.alpha_st.resize(count);
    lb.rcs_sr.resize(count);
    lb.rcs_st.resize(count);
    lb.gain_ris.resize(count);
    for (std::size_t l = 0; l < count; ++l) {
        const ElementRcs rcs = element_rcs(scene, l);
        lb.rcs_sr[l] = rcs.sr;
        lb.rcs_st[l] = rcs.st;
        lb.gain_ris[l] = antennas.toward_ris.gain_toward(g.element_positions[l] - g.radar_position);
        lb.alpha_sr[l] = indirect_amplitude(transmit_power, lb.gain_target, lb.gain_ris[l], g.wavelength, rcs.sr,
                                            d.rho, d.d_t, d.d_r_l[l]);
        lb.alpha_st[l] = indirect_amplitude(transmit_power, lb.gain_target, lb.gain_ris[l], g.wavelength, rcs.st,
                                            d.rho, d.d_t, d.d_r_l[l]);
    }
    return lb;
}

double wrap_phase(double phase) {
    double r = std::fmod(phase, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r >= kTwoPi ? 0.0 : r;
}

double propagation_phase(double path_length, double wavelength) {
    return wrap_phase(-kTwoPi * path_length / wavelength);
}

const std::vector<double>& ChannelPhases::known_target_phases() const {
    switch (regime) {
        case SpacingRegime::Closely: return psi_t_prime;
        case SpacingRegime::Widely: return psi_t_dprime;
        case SpacingRegime::Indeterminate: break;
    }
    throw UnsupportedError("no known target-phase decomposition in the indeterminate regime");
}

ChannelPhases phase_decomposition(const Scene& scene, SpacingRegime regime) {
    const double lambda = scene.geometry.wavelength;
    const DerivedGeometry& d = scene.derived;
    const std::size_t count = d.d_t_l.size();
    ChannelPhases phases;
    phases.regime = regime;
    phases.psi_r.resize(count);
    phases.psi_t_prime.resize(count);
    phases.psi_t_dprime.resize(count);
    for (std::size_t l = 0; l < count; ++l) {
        phases.psi_r[l] = propagation_phase(d.d_r_l[l], lambda);
        phases.psi_t_prime[l] = propagation_phase(d.d_t_l[l] - d.rho, lambda);
        phases.psi_t_dprime[l] = propagation_phase(d.d_t_l[l] - d.d_t_l[0], lambda);
    }
    return phases;
}

}  // namespace risradar

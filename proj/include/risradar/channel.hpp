#pragma once

#include <cstddef>
#include <vector>

#include "risradar/antenna.hpp"
#include "risradar/geometry.hpp"

namespace risradar {

// The radar's two arrays: one toward the target (G_rt), one toward the RIS (G_rs,l).
struct RadarAntennas {
    SquareArrayAntenna toward_target;
    SquareArrayAntenna toward_ris;
};

// Boresights point exactly at the target and at the RIS center.
RadarAntennas make_radar_antennas(const Scene& scene);

struct ElementRcs {
    double sr = 0.0;  // target-RIS-radar path
    double st = 0.0;  // radar-RIS-target path
};

// pi (lambda/2)^2 cos(theta_t) cos(omega_t) cos(theta_r) cos(omega_r); zero at
// grazing or from behind the surface.
double element_rcs_model(double wavelength, const AzEl& target_incidence, const AzEl& radar_incidence);
ElementRcs element_rcs(const Scene& scene, std::size_t element);

double direct_amplitude(double transmit_power, double gain_target, double wavelength, double rho);
double indirect_amplitude(double transmit_power, double gain_target, double gain_ris_element, double wavelength,
                          double element_rcs, double rho, double d_t, double d_r_element);

struct LinkBudget {
    double alpha = 0.0;
    std::vector<double> alpha_sr;
    std::vector<double> alpha_st;
    std::vector<double> rcs_sr;
    std::vector<double> rcs_st;
    double gain_target = 0.0;        // G_rt
    std::vector<double> gain_ris;    // G_rs,l
    double transmit_power = 0.0;     // P_r
    double noise_power = 0.0;        // P_w

    double alpha_sr_sum() const;
    double alpha_st_sum() const;
};

LinkBudget compute_link_budget(const Scene& scene, const RadarAntennas& antennas, double transmit_power,
                               double noise_power);

// Wraps an angle into [0, 2pi).
double wrap_phase(double phase);

// Phases the detector may know. The latent beta / beta_s live with the Monte
// Carlo target draws, never here.
struct ChannelPhases {
    std::vector<double> psi_r;         // RIS-radar, one way
    std::vector<double> psi_t_prime;   // closely: psi_t,l = psi'_t,l + beta
    std::vector<double> psi_t_dprime;  // widely: psi_t,l = psi''_t,l + beta_s, psi''_t,1 = 0
    SpacingRegime regime = SpacingRegime::Indeterminate;

    // The decomposition matching the regime; throws UnsupportedError when indeterminate.
    const std::vector<double>& known_target_phases() const;
};

ChannelPhases phase_decomposition(const Scene& scene, SpacingRegime regime);

// Propagation phase -2 pi d / lambda, wrapped.
double propagation_phase(double path_length, double wavelength);

}  // namespace risradar

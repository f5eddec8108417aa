#pragma once

#include <vector>

#include "risradar/antenna.hpp"
#include "risradar/channel.hpp"
#include "risradar/detection.hpp"
#include "risradar/geometry.hpp"

namespace risradar {

struct Interval {
    double min = 0.0;
    double max = 0.0;
    bool contains(double v) const { return v >= min && v <= max; }
};

struct FluctuationModel {
    FluctuationLaw law = FluctuationLaw::Exponential;
    double sigma_mean = 1.0;    // radar-side mean RCS
    double sigma_s_mean = 1.0;  // RIS-side mean RCS
    Interval sigma_bounds{1.0, 1.0};
    Interval sigma_s_bounds{1.0, 1.0};

    // Throws ConfigError unless both means are positive and inside their bounds.
    void validate() const;
};

struct GainFactors {
    double k_sr = 0.0;
    double k_st = 0.0;
};

struct SnrReport {
    double snr0 = 0.0;
    DetectionCase detection_case = DetectionCase::A;
    SpacingRegime regime = SpacingRegime::Closely;
    double epsilon = 1.0;
    std::vector<double> snr_values;  // per observation; one value in Case c

    // Sum of the per-observation SNRs: the SNR at the output of the coherent
    // combiner in the closely-spaced regime.
    double total() const;
};

double snr0(double alpha, double sigma_mean, double noise_power);

// K = (sum_l alpha_l / alpha)^2. Throws DomainError when alpha is zero.
GainFactors gains(const LinkBudget& budget);

// The same factors from distances, gains and element RCS directly:
// rho^2 / (4 pi d_t^2 G_rt) * (sum_l sqrt(G_rs,l S_l) / d_r,l)^2.
GainFactors gains_from_geometry(const Scene& scene, const LinkBudget& budget);

SnrReport snr_closely(DetectionCase c, double snr0, const GainFactors& k, double epsilon);

// Case b: 1{K_st <= 1}; Case c: 1 / (1 + K_st). Case a has no split.
double optimal_split_closely(DetectionCase c, double k_st);

SnrReport snr_widely(DetectionCase c, double snr0, const GainFactors& k, double epsilon, double sigma_mean,
                     double sigma_s_mean);

// Worst-case SNR objective used by the widely-spaced split (means at their lower bounds).
struct WorstCaseSnrs {
    double snr1 = 0.0;
    double snr2 = 0.0;
};
WorstCaseSnrs worst_case_snrs_widely(DetectionCase c, double snr0, double k_st, const FluctuationModel& model,
                                     double epsilon);

// Case c: 1{K_st sigma_s,min / sigma_min <= 1}. Case b: maximizes the worst-case
// closed-form Pd over a 1e-3 grid followed by golden-section refinement.
double optimal_split_widely(DetectionCase c, double snr0, double k_st, const FluctuationModel& model,
                            double gamma);

// Case-c SNR at the worst-case-optimal split, written as the indicator form.
double snr_c_widely_at_optimum(double snr0, double k_st, const FluctuationModel& model);

struct ApproximationInputs {
    double a_sr = 0.0;  // effective RIS area seen from the radar
    double a_rs = 0.0;  // radar 3-dB footprint at d_r
    double g_st = 0.0;  // RIS aperture gain toward the target
};

ApproximationInputs approximation_inputs(const Scene& scene, const SquareArrayAntenna& toward_ris);

// K_sr = K_st ~ rho^2 G_st / (d_t^2 G_rt) * min{A_sr/A_rs, A_rs/A_sr}.
double approx_gain(double rho, double d_t, double gain_target, const ApproximationInputs& in);

// P_r G_rt G_st lambda^2 sigma / ((4 pi)^3 rho^2 d_t^2 P_w).
double indirect_radar_equation_snr(double transmit_power, double gain_target, double gain_ris_target,
                                   double wavelength, double rho, double d_t, double sigma_mean,
                                   double noise_power);

double to_db(double linear);
double from_db(double db);

}  // namespace risradar

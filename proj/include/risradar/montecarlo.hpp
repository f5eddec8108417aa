#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "risradar/detection.hpp"
#include "risradar/geometry.hpp"
#include "risradar/ris.hpp"
#include "risradar/scenario.hpp"
#include "risradar/snr.hpp"

namespace risradar {

enum class Hypothesis { TargetPresent, TargetAbsent };

struct TrialConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    Hypothesis hypothesis = Hypothesis::TargetPresent;
};

// Latent target responses sqrt(sigma) e^{i beta} and sqrt(sigma_s) e^{i beta_s}.
struct TargetDraw {
    std::complex<double> direct;
    std::complex<double> ris;
};

struct EmpiricalRate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;

    // |estimate - expected| <= sigmas * standard_error.
    bool agrees_with(double expected, double sigmas = 3.0) const;
    double deviation_sigmas(double expected) const;
};

EmpiricalRate make_rate(std::uint64_t hits, std::uint64_t trials);

using Rng = std::mt19937_64;

// Stream for partition `index` of a run seeded with `seed`; independent of
// which worker executes the partition.
Rng partition_rng(std::uint64_t seed, std::uint64_t index);

// Trial-independent part of the received signals.
struct SignalModel {
    double alpha = 0.0;                  // direct-path amplitude
    std::complex<double> indirect{0.0};  // coherent RIS sum without the common target factor
    double noise_power = 1.0;
    SpacingRegime regime = SpacingRegime::Closely;
};

// Uses alpha_sr for Case a and alpha_st for Cases b/c, evaluated with the
// known target-phase decomposition for the scenario's regime.
SignalModel make_signal_model(const Scenario& scenario, DetectionCase c, const RisPhaseProgram& program);

// Closely regime: one response shared by both paths. Widely: independent draws.
TargetDraw draw_target(const FluctuationModel& model, SpacingRegime regime, Rng& rng);

Observation simulate_observation(const SignalModel& signal, DetectionCase c, double epsilon,
                                 const TargetDraw& draw, Hypothesis hypothesis, Rng& rng);

// GLRT matching the case and regime. Combiner weights come from the link
// budget (alpha, sum_l alpha_l), not from the realized coherent sum.
DetectorConfig make_detector(const Scenario& scenario, DetectionCase c, double epsilon, double gamma);

struct TrialSetup {
    SignalModel signal;
    DetectionCase detection_case = DetectionCase::A;
    double epsilon = 1.0;
    FluctuationModel fluctuation;
    DetectorConfig detector;
};

// Fraction of trials whose statistic exceeds the threshold. Trials run in
// fixed-size partitions, each with its own derived stream, spread across
// hardware threads; the result depends only on (setup, config).
EmpiricalRate estimate_rate(const TrialSetup& setup, const TrialConfig& config);

}  // namespace risradar

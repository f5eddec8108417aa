#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>

namespace risradar {

enum class FluctuationLaw { NonFluctuating, Exponential, Gamma };

std::string to_string(FluctuationLaw law);
FluctuationLaw parse_fluctuation_law(const std::string& text);

enum class DetectorKind {
    CoherentCombiner,  // closely-spaced Cases a and b
    SingleEnergy,      // any Case c
    DualEnergy,        // widely-spaced Cases a and b
};

std::string to_string(DetectorKind kind);

struct Observation {
    std::complex<double> x1;
    std::optional<std::complex<double>> x2;
    double noise_power = 1.0;
};

struct DetectorConfig {
    DetectorKind kind = DetectorKind::SingleEnergy;
    double gamma = 1.0;
    std::optional<std::array<double, 2>> weights;  // combiner only
};

double glrt_statistic(const Observation& obs, const DetectorConfig& config);

// Single-observation kinds: Pfa = e^{-gamma}. DualEnergy: Pfa = e^{-gamma} (1 + gamma).
double pfa_from_threshold(DetectorKind kind, double gamma);
double threshold_from_pfa(DetectorKind kind, double pfa);

// First-order Marcum Q function Q_1(a, b).
double marcum_q(double a, double b);

// Single-observation detection probability for an energy detector at threshold gamma.
double pd_single(FluctuationLaw law, double snr, double gamma);

// Two independent exponential (Swerling-1) observations, energy-summed.
double pd_dual_exponential(double snr1, double snr2, double gamma);

// Per-observation SNRs in, Pd out. The combiner collapses its observations into
// one effective SNR (their sum); SingleEnergy takes exactly one SNR; DualEnergy
// takes two and supports only the exponential law.
double pd_closed_form(FluctuationLaw law, std::span<const double> snrs, double gamma, DetectorKind kind);

}  // namespace risradar

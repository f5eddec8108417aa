#include "risradar/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "risradar/error.hpp"

namespace risradar {

std::string to_string(FluctuationLaw law) {
    switch (law) {
        case FluctuationLaw::NonFluctuating: return "nonfluctuating";
        case FluctuationLaw::Exponential: return "exponential";
        case FluctuationLaw::Gamma: return "gamma";
    }
    return "?";
}

FluctuationLaw parse_fluctuation_law(const std::string& text) {
    if (text == "nonfluctuating" || text == "non-fluctuating" || text == "marcum") {
        return FluctuationLaw::NonFluctuating;
    }
    if (text == "exponential" || text == "swerling1") return FluctuationLaw::Exponential;
    if (text == "gamma" || text == "swerling3") return FluctuationLaw::Gamma;
    throw ConfigError("unknown fluctuation law '" + text + "'");
}

std::string to_string(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::CoherentCombiner: return "coherent-combiner";
        case DetectorKind::SingleEnergy: return "single-energy";
        case DetectorKind::DualEnergy: return "dual-energy";
    }
    return "?";
}

double glrt_statistic(const Observation& obs, const DetectorConfig& config) {
    if (!(obs.noise_power > 0.0)) {
        throw DomainError("noise power must be positive");
    }
    switch (config.kind) {
        case DetectorKind::SingleEnergy:
            return std::norm(obs.x1) / obs.noise_power;
        case DetectorKind::DualEnergy:
            if (!obs.x2) {
                throw ConfigError("dual-energy detector needs two observations");
            }
            return (std::norm(obs.x1) + std::norm(*obs.x2)) / obs.noise_power;
        case DetectorKind::CoherentCombiner: {
            if (!obs.x2 || !config.weights) {
                throw ConfigError("coherent combiner needs two observations and a weight vector");
            }
            const auto [w1, w2] = *config.weights;
            const double energy = w1 * w1 + w2 * w2;
            if (!(energy > 0.0)) {
                throw DomainError("combiner weight vector is zero");
            }
            return std::norm(w1 * obs.x1 + w2 * *obs.x2) / (energy * obs.noise_power);
        }
    }
    throw ConfigError("unknown detector kind");
}

double pfa_from_threshold(DetectorKind kind, double gamma) {
    if (gamma < 0.0) {
        return 1.0;
    }
    if (kind == DetectorKind::DualEnergy) {
        return std::exp(-gamma) * (1.0 + gamma);
    }
    return std::exp(-gamma);
}

double threshold_from_pfa(DetectorKind kind, double pfa) {
    if (!(pfa > 0.0 && pfa < 1.0)) {
        throw ConfigError("Pfa must lie in (0, 1)");
    }
    if (kind != DetectorKind::DualEnergy) {
        return -std::log(pfa);
    }
    // Root of g(gamma) = log1p(gamma) - gamma - log(pfa), decreasing on gamma > 0.
    const double target = std::log(pfa);
    const auto g = [target](double x) { return std::log1p(x) - x - target; };
    double lo = 0.0;
    double hi = -target + 1.0;
    while (g(hi) > 0.0) {
        hi *= 2.0;
    }
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double value = g(x);
        if (std::abs(value) <= 1e-15) {
            break;
        }
        if (value > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double slope = -x / (1.0 + x);
        double next = x - value / slope;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (next == x) {
            break;
        }
        x = next;
    }
    return x;
}

double marcum_q(double a, double b) {
    if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("Marcum Q arguments must be finite and non-negative");
    }
    if (b == 0.0) {
        return 1.0;
    }
    const double lambda = 0.5 * a * a;  // Poisson mean of the noncentrality
    const double x = 0.5 * b * b;
    if (lambda == 0.0) {
        return std::exp(-x);
    }
    // Q_1(a, b) = sum_n Pois(n; a^2/2) * P(Pois(b^2/2) <= n), the Bessel series
    // regrouped into nonnegative terms. Every term is formed in log space so
    // neither e^{-lambda} nor e^{-x} underflows for large arguments.
    const double log_lambda = std::log(lambda);
    const double log_x = std::log(x);
    const auto last = static_cast<long>(std::ceil(lambda + 12.0 * std::sqrt(lambda) + 40.0));
    double cdf = 0.0;
    double total = 0.0;
    for (long n = 0; n <= last; ++n) {
        const double log_fact = std::lgamma(static_cast<double>(n) + 1.0);
        cdf = std::min(1.0, cdf + std::exp(-x + static_cast<double>(n) * log_x - log_fact));
        const double weight = std::exp(-lambda + static_cast<double>(n) * log_lambda - log_fact);
        total += weight * cdf;
    }
    return std::clamp(total, 0.0, 1.0);
}

double pd_single(FluctuationLaw law, double snr, double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError("threshold must be positive");
    }
    if (!(snr >= 0.0)) {
        throw DomainError("SNR must be non-negative");
    }
    switch (law) {
        case FluctuationLaw::NonFluctuating:
            return marcum_q(std::sqrt(2.0 * snr), std::sqrt(2.0 * gamma));
        case FluctuationLaw::Exponential:
            return std::exp(-gamma / (1.0 + snr));
        case FluctuationLaw::Gamma: {
            const double h = 0.5 * snr;
            return (1.0 + gamma * h / ((1.0 + h) * (1.0 + h))) * std::exp(-gamma / (1.0 + h));
        }
    }
    throw ConfigError("unknown fluctuation law");
}

double pd_dual_exponential(double snr1, double snr2, double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError("threshold must be positive");
    }
    if (!(snr1 >= 0.0) || !(snr2 >= 0.0)) {
        throw DomainError("SNR must be non-negative");
    }
    const double m1 = 1.0 + snr1;
    const double m2 = 1.0 + snr2;
    if (std::abs(snr1 - snr2) < 1e-9 * m1) {
        // Erlang-2 tail.
        return (1.0 + gamma / m1) * std::exp(-gamma / m1);
    }
    // (m1 e^{-g/m1} - m2 e^{-g/m2}) / (m1 - m2), rearranged around e^{-g/m2} so the
    // difference does not cancel when m1 is close to m2.
    const double e2 = std::exp(-gamma / m2);
    const double delta = gamma / m2 - gamma / m1;
    if (std::abs(delta) < 0.5) {
        const double ratio = std::expm1(delta) / delta;  // -> 1 as delta -> 0
        return std::clamp(e2 * (1.0 + ratio * gamma / m2), 0.0, 1.0);
    }
    return std::clamp((m1 * std::exp(-gamma / m1) - m2 * e2) / (m1 - m2), 0.0, 1.0);
}

double pd_closed_form(FluctuationLaw law, std::span<const double> snrs, double gamma, DetectorKind kind) {
    switch (kind) {
        case DetectorKind::CoherentCombiner: {
            if (snrs.empty()) {
                throw ConfigError("no SNR supplied");
            }
            return pd_single(law, std::accumulate(snrs.begin(), snrs.end(), 0.0), gamma);
        }
        case DetectorKind::SingleEnergy:
            if (snrs.size() != 1) {
                throw ConfigError("single-energy detector takes exactly one SNR");
            }
            return pd_single(law, snrs[0], gamma);
        case DetectorKind::DualEnergy:
            if (snrs.size() != 2) {
                throw ConfigError("dual-energy detector takes exactly two SNRs");
            }
            if (law != FluctuationLaw::Exponential) {
                throw UnsupportedError("dual-observation Pd has no closed form for the " + to_string(law) + " law");
            }
            return pd_dual_exponential(snrs[0], snrs[1], gamma);
    }
    throw ConfigError("unknown detector kind");
}

}  // namespace risradar

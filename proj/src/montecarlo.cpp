#include "risradar/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "risradar/error.hpp"

namespace risradar {

namespace {

constexpr std::uint64_t kPartitionSize = 1u << 16;

std::complex<double> complex_gaussian(double variance, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

double draw_rcs(FluctuationLaw law, double mean, Rng& rng) {
    switch (law) {
        case FluctuationLaw::NonFluctuating:
            return mean;
        case FluctuationLaw::Exponential:
            return std::exponential_distribution<double>(1.0 / mean)(rng);
        case FluctuationLaw::Gamma: {
            // Shape 2: sum of two exponentials of mean sigma/2.
            std::exponential_distribution<double> half(2.0 / mean);
            const double a = half(rng);
            const double b = half(rng);
            return a + b;
        }
    }
    throw ConfigError("unknown fluctuation law");
}

std::complex<double> draw_response(FluctuationLaw law, double mean, Rng& rng) {
    const double sigma = draw_rcs(law, mean, rng);
    const double beta = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    return std::polar(std::sqrt(sigma), beta);
}

std::uint64_t run_partition(const TrialSetup& setup, const TrialConfig& config, std::uint64_t index) {
    const std::uint64_t begin = index * kPartitionSize;
    const std::uint64_t count = std::min(kPartitionSize, config.trials - begin);
    Rng rng = partition_rng(config.seed, index);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
        const TargetDraw draw = draw_target(setup.fluctuation, setup.signal.regime, rng);
        const Observation obs =
            simulate_observation(setup.signal, setup.detection_case, setup.epsilon, draw, config.hypothesis, rng);
        if (glrt_statistic(obs, setup.detector) > setup.detector.gamma) {
            ++hits;
        }
    }
    return hits;
}

}  // namespace

bool EmpiricalRate::agrees_with(double expected, double sigmas) const {
    return std::abs(estimate - expected) <= sigmas * standard_error;
}

double EmpiricalRate::deviation_sigmas(double expected) const {
    const double diff = std::abs(estimate - expected);
    if (standard_error > 0.0) {
        return diff / standard_error;
    }
    return diff == 0.0 ? 0.0 : INFINITY;
}

EmpiricalRate make_rate(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0) {
        throw ConfigError("at least one trial is required");
    }
    EmpiricalRate r;
    r.hits = hits;
    r.trials = trials;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.standard_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    return r;
}

Rng partition_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

SignalModel make_signal_model(const Scenario& scenario, DetectionCase c, const RisPhaseProgram& program) {
    const std::vector<double>& amplitudes =
        c == DetectionCase::A ? scenario.budget.alpha_sr : scenario.budget.alpha_st;
    const std::vector<double>& known = scenario.phases.known_target_phases();
    SignalModel s;
    s.alpha = scenario.budget.alpha;
    s.indirect = coherent_sum(amplitudes, known, program.phi, scenario.phases.psi_r);
    s.noise_power = scenario.budget.noise_power;
    s.regime = scenario.regime;
    return s;
}

TargetDraw draw_target(const FluctuationModel& model, SpacingRegime regime, Rng& rng) {
    TargetDraw d;
    d.direct = draw_response(model.law, model.sigma_mean, rng);
    if (regime == SpacingRegime::Widely) {
        d.ris = draw_response(model.law, model.sigma_s_mean, rng);
    } else {
        d.ris = d.direct;
    }
    return d;
}

Observation simulate_observation(const SignalModel& signal, DetectionCase c, double epsilon,
                                 const TargetDraw& draw, Hypothesis hypothesis, Rng& rng) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw ConfigError("power split must lie in [0, 1]");
    }
    const bool present = hypothesis == Hypothesis::TargetPresent;
    const std::complex<double> direct = present ? signal.alpha * draw.direct : std::complex<double>{};
    const std::complex<double> indirect = present ? draw.ris * signal.indirect : std::complex<double>{};

    Observation obs;
    obs.noise_power = signal.noise_power;
    switch (c) {
        case DetectionCase::A:
            obs.x1 = direct + complex_gaussian(signal.noise_power, rng);
            obs.x2 = indirect + complex_gaussian(signal.noise_power, rng);
            break;
        case DetectionCase::B:
            obs.x1 = std::sqrt(epsilon) * direct + complex_gaussian(signal.noise_power, rng);
            obs.x2 = std::sqrt(1.0 - epsilon) * indirect + complex_gaussian(signal.noise_power, rng);
            break;
        case DetectionCase::C:
            obs.x1 = std::sqrt(epsilon) * direct + std::sqrt(1.0 - epsilon) * indirect +
                     complex_gaussian(signal.noise_power, rng);
            break;
    }
    return obs;
}

DetectorConfig make_detector(const Scenario& scenario, DetectionCase c, double epsilon, double gamma) {
    DetectorConfig d;
    d.gamma = gamma;
    if (c == DetectionCase::C) {
        d.kind = DetectorKind::SingleEnergy;
        return d;
    }
    if (scenario.regime == SpacingRegime::Widely) {
        d.kind = DetectorKind::DualEnergy;
        return d;
    }
    d.kind = DetectorKind::CoherentCombiner;
    const double alpha = scenario.budget.alpha;
    if (c == DetectionCase::A) {
        d.weights = std::array<double, 2>{alpha, scenario.budget.alpha_sr_sum()};
    } else {
        d.weights = std::array<double, 2>{alpha * std::sqrt(epsilon),
                                          scenario.budget.alpha_st_sum() * std::sqrt(1.0 - epsilon)};
    }
    return d;
}

EmpiricalRate estimate_rate(const TrialSetup& setup, const TrialConfig& config) {
    if (config.trials == 0) {
        throw ConfigError("at least one trial is required");
    }
    const std::uint64_t partitions = (config.trials + kPartitionSize - 1) / kPartitionSize;
    const std::uint64_t workers =
        std::min<std::uint64_t>(partitions, std::max(1u, std::thread::hardware_concurrency()));

    std::vector<std::future<std::uint64_t>> futures;
    futures.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&setup, &config, w, workers, partitions] {
            std::uint64_t hits = 0;
            for (std::uint64_t p = w; p < partitions; p += workers) {
                hits += run_partition(setup, config, p);
            }
            return hits;
        }));
    }
    std::uint64_t hits = 0;
    for (auto& f : futures) {
        hits += f.get();
    }
    return make_rate(hits, config.trials);
}

}  // namespace risradar

#include <doctest.h>

#include "risradar/error.hpp"
#include "risradar/montecarlo.hpp"
#include "support.hpp"

using namespace risradar;

namespace {

TrialSetup energy_setup(double snr, FluctuationLaw law) {
    TrialSetup s;
    s.fluctuation.law = law;
    s.signal.alpha = std::sqrt(snr);
    s.signal.noise_power = 1.0;
    s.signal.regime = SpacingRegime::Widely;
    s.detection_case = DetectionCase::C;
    s.epsilon = 1.0;
    s.detector = {DetectorKind::SingleEnergy, threshold_from_pfa(DetectorKind::SingleEnergy, 1e-2), std::nullopt};
    return s;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("empirical rate") {
    const EmpiricalRate r = make_rate(250, 1000);
    CHECK(r.estimate == 0.25);
    CHECK(r.standard_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 1000.0)));
    CHECK(r.agrees_with(0.25 + 2.9 * r.standard_error));
    CHECK_FALSE(r.agrees_with(0.25 + 3.1 * r.standard_error));
    CHECK(r.deviation_sigmas(0.25) == 0.0);
    CHECK_THROWS_AS(make_rate(0, 0), ConfigError);
}

TEST_CASE("streams depend only on seed and partition") {
    Rng a = partition_rng(1, 0);
    Rng b = partition_rng(1, 0);
    Rng c = partition_rng(1, 1);
    Rng d = partition_rng(2, 0);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("estimates are reproducible") {
    const TrialSetup s = energy_setup(3.0, FluctuationLaw::Exponential);
    const TrialConfig cfg{42, 300000, Hypothesis::TargetPresent};
    const EmpiricalRate r1 = estimate_rate(s, cfg);
    const EmpiricalRate r2 = estimate_rate(s, cfg);
    CHECK(r1.hits == r2.hits);
    const EmpiricalRate r3 = estimate_rate(s, {43, 300000, Hypothesis::TargetPresent});
    CHECK(r1.hits != r3.hits);
    CHECK(r1.agrees_with(pd_single(FluctuationLaw::Exponential, 3.0, s.detector.gamma)));
    CHECK_THROWS_AS(estimate_rate(s, {1, 0, Hypothesis::TargetPresent}), ConfigError);
}

TEST_CASE("null hypothesis ignores the signal") {
    const TrialSetup s = energy_setup(50.0, FluctuationLaw::NonFluctuating);
    const EmpiricalRate r = estimate_rate(s, {7, 200000, Hypothesis::TargetAbsent});
    CHECK(r.agrees_with(1e-2));
}

TEST_CASE("noise has the configured power") {
    SignalModel sig;
    sig.noise_power = 2.5;
    Rng rng = partition_rng(3, 0);
    double acc1 = 0.0;
    double acc2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const Observation o = simulate_observation(sig, DetectionCase::A, 1.0, {}, Hypothesis::TargetAbsent, rng);
        acc1 += std::norm(o.x1);
        acc2 += std::norm(*o.x2);
    }
    CHECK(acc1 / n == doctest::Approx(2.5).epsilon(0.01));
    CHECK(acc2 / n == doctest::Approx(2.5).epsilon(0.01));
}

TEST_CASE("observation structure per case") {
    SignalModel sig;
    sig.alpha = 2.0;
    sig.indirect = {0.0, 3.0};
    sig.noise_power = 1e-30;
    const TargetDraw draw{{1.0, 0.0}, {0.0, 1.0}};
    Rng rng = partition_rng(0, 0);
    const Observation a = simulate_observation(sig, DetectionCase::A, 1.0, draw, Hypothesis::TargetPresent, rng);
    CHECK(a.x1.real() == doctest::Approx(2.0));
    CHECK(a.x2->real() == doctest::Approx(-3.0));
    const Observation b = simulate_observation(sig, DetectionCase::B, 0.25, draw, Hypothesis::TargetPresent, rng);
    CHECK(b.x1.real() == doctest::Approx(1.0));
    CHECK(b.x2->real() == doctest::Approx(-3.0 * std::sqrt(0.75)));
    const Observation c = simulate_observation(sig, DetectionCase::C, 0.25, draw, Hypothesis::TargetPresent, rng);
    CHECK_FALSE(c.x2.has_value());
    CHECK(c.x1.real() == doctest::Approx(1.0 - 3.0 * std::sqrt(0.75)));
    CHECK_THROWS_AS(simulate_observation(sig, DetectionCase::B, 1.5, draw, Hypothesis::TargetPresent, rng),
                    ConfigError);
}

TEST_CASE("closely draws share one target response") {
    FluctuationModel m;
    Rng rng = partition_rng(9, 0);
    for (int i = 0; i < 10; ++i) {
        const TargetDraw c = draw_target(m, SpacingRegime::Closely, rng);
        CHECK(c.direct == c.ris);
        const TargetDraw w = draw_target(m, SpacingRegime::Widely, rng);
        CHECK(w.direct != w.ris);
    }
}

TEST_CASE("gamma law has the right mean") {
    FluctuationModel m;
    m.law = FluctuationLaw::Gamma;
    m.sigma_mean = 3.0;
    Rng rng = partition_rng(4, 0);
    double acc = 0.0;
    double acc2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double s = std::norm(draw_target(m, SpacingRegime::Closely, rng).direct);
        acc += s;
        acc2 += s * s;
    }
    const double mean = acc / n;
    CHECK(mean == doctest::Approx(3.0).epsilon(0.01));
    // Shape 2: variance = mean^2 / 2.
    CHECK(acc2 / n - mean * mean == doctest::Approx(4.5).epsilon(0.03));
}

TEST_CASE("detector selection") {
    const Scenario s = build_scenario(test::simple_inputs(0.4, 3000.0, 30.0), SpacingRegime::Closely);
    const DetectorConfig a = make_detector(s, DetectionCase::A, 1.0, 5.0);
    CHECK(a.kind == DetectorKind::CoherentCombiner);
    REQUIRE(a.weights.has_value());
    CHECK((*a.weights)[1] == doctest::Approx(s.budget.alpha_sr_sum()));
    CHECK(make_detector(s, DetectionCase::C, 0.5, 5.0).kind == DetectorKind::SingleEnergy);
    const Scenario w = build_scenario(test::simple_inputs(0.4, 400.0, 30.0), SpacingRegime::Widely);
    CHECK(make_detector(w, DetectionCase::B, 0.5, 5.0).kind == DetectorKind::DualEnergy);
}

}  // TEST_SUITE

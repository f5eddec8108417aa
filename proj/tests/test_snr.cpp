#include <doctest.h>

#include <random>

#include "risradar/error.hpp"
#include "risradar/snr.hpp"
#include "support.hpp"

using namespace risradar;

TEST_SUITE("snr") {

TEST_CASE("baseline snr") {
    CHECK(snr0(1.0, 1.0, 1.0) == 1.0);
    CHECK(snr0(0.0, 1.0, 1.0) == 0.0);
    CHECK(snr0(0.0224, 10.0, 1e-3) == doctest::Approx(0.0224 * 0.0224 * 1e4));
    CHECK(snr0(0.0224, 10.0, 1e-3) == doctest::Approx(5.03).epsilon(5e-3));
    CHECK_THROWS_AS(snr0(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("gain factors") {
    LinkBudget lb;
    lb.alpha = 0.5;
    lb.alpha_sr = {0.0, 0.0};
    lb.alpha_st = {0.0, 0.0};
    CHECK(gains(lb).k_sr == 0.0);
    lb.alpha_sr = {0.5};
    lb.alpha_st = {0.25};
    CHECK(gains(lb).k_sr == doctest::Approx(1.0));
    CHECK(gains(lb).k_st == doctest::Approx(0.25));
    lb.alpha = 0.0;
    CHECK_THROWS_AS(gains(lb), DomainError);
}

TEST_CASE("distance form of K matches the amplitude ratio") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Scenario s = build_scenario(test::random_inputs(rng));
        const GainFactors a = gains(s.budget);
        const GainFactors b = gains_from_geometry(s.scene, s.budget);
        CHECK(std::abs(a.k_sr - b.k_sr) <= 1e-10 * a.k_sr);
        CHECK(std::abs(a.k_st - b.k_st) <= 1e-10 * a.k_st);
        CHECK(a.k_sr == a.k_st);
    }
}

TEST_CASE("closely spaced snr") {
    const double s0 = 3.0;
    const SnrReport a = snr_closely(DetectionCase::A, s0, {2.006, 2.006}, 1.0);
    CHECK(to_db(a.total() / s0) == doctest::Approx(4.78).epsilon(1e-3));
    CHECK(snr_closely(DetectionCase::C, s0, {1.0, 1.0}, 1.0).total() == doctest::Approx(s0));
    CHECK(snr_closely(DetectionCase::C, s0, {1.0, 1.0}, 0.5).total() == doctest::Approx(2.0 * s0));
    CHECK(snr_closely(DetectionCase::B, s0, {1.0, 2.0}, 0.25).snr_values.size() == 2);
    CHECK_THROWS_AS(snr_closely(DetectionCase::B, s0, {1.0, 1.0}, 1.5), ConfigError);
}

TEST_CASE("closely spaced optimal splits") {
    CHECK(optimal_split_closely(DetectionCase::C, 3.0) == doctest::Approx(0.25));
    CHECK(optimal_split_closely(DetectionCase::B, 0.5) == 1.0);
    CHECK(optimal_split_closely(DetectionCase::B, 2.0) == 0.0);
    CHECK(optimal_split_closely(DetectionCase::C, 0.0) == 1.0);
    CHECK_THROWS_AS(optimal_split_closely(DetectionCase::A, 1.0), ConfigError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> logk(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double k = std::pow(10.0, logk(rng));
        const GainFactors g{k, k};
        const double sb = snr_closely(DetectionCase::B, 1.0, g, optimal_split_closely(DetectionCase::B, k)).total();
        const double sc = snr_closely(DetectionCase::C, 1.0, g, optimal_split_closely(DetectionCase::C, k)).total();
        CHECK(sb == doctest::Approx(std::max(1.0, k)).epsilon(1e-12));
        CHECK(sc == doctest::Approx(1.0 + k).epsilon(1e-12));
        CHECK(snr_closely(DetectionCase::A, 1.0, g, 1.0).total() >= 1.0);
        for (int i = 0; i <= 1000; i += 7) {
            const double e = i / 1000.0;
            CHECK(snr_closely(DetectionCase::B, 1.0, g, e).total() <= sb * (1.0 + 1e-12));
            CHECK(snr_closely(DetectionCase::C, 1.0, g, e).total() <= sc * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("widely spaced snr") {
    const double s0 = 4.0;
    const SnrReport a = snr_widely(DetectionCase::A, s0, {1.0, 1.0}, 1.0, 1.0, 1.0);
    CHECK(a.snr_values[0] == s0);
    CHECK(a.snr_values[1] == s0);
    CHECK(snr_widely(DetectionCase::C, s0, {3.0, 3.0}, 1.0, 1.0, 1.0).total() == doctest::Approx(s0));
    const SnrReport b = snr_widely(DetectionCase::B, s0, {2.0, 2.0}, 0.5, 1.0, 1.0);
    CHECK(b.snr_values[0] == doctest::Approx(0.5 * s0));
    CHECK(b.snr_values[1] == doctest::Approx(s0));

    // Case a dominates Case b observation-wise when K_sr = K_st.
    for (double k = 0.05; k < 50.0; k *= 1.7) {
        const SnrReport ra = snr_widely(DetectionCase::A, s0, {k, k}, 1.0, 1.0, 2.0);
        for (int i = 0; i <= 100; ++i) {
            const SnrReport rb = snr_widely(DetectionCase::B, s0, {k, k}, i / 100.0, 1.0, 2.0);
            CHECK(ra.snr_values[0] >= rb.snr_values[0]);
            CHECK(ra.snr_values[1] >= rb.snr_values[1]);
        }
    }
}

TEST_CASE("widely spaced Case c split") {
    FluctuationModel m;
    m.sigma_bounds = {0.5, 2.0};
    m.sigma_s_bounds = {0.5, 2.0};
    const double gamma = 10.0;
    CHECK(optimal_split_widely(DetectionCase::C, 1.0, 0.5, m, gamma) == 1.0);
    CHECK(snr_c_widely_at_optimum(5.0, 0.5, m) == doctest::Approx(5.0));
    CHECK(optimal_split_widely(DetectionCase::C, 1.0, 4.0, m, gamma) == 0.0);
    CHECK(snr_c_widely_at_optimum(5.0, 4.0, m) == doctest::Approx(20.0));
    CHECK_THROWS_AS(optimal_split_widely(DetectionCase::A, 1.0, 1.0, m, gamma), ConfigError);
}

TEST_CASE("widely spaced Case b split matches a grid search") {
    FluctuationModel m;
    const double gamma = threshold_from_pfa(DetectorKind::DualEnergy, 1e-6);
    for (const double snr0_db : {5.0, 12.0, 20.0}) {
        for (const double k : {0.3, 1.0, 3.0}) {
            const double s0 = from_db(snr0_db);
            const auto worst = [&](double e) {
                const WorstCaseSnrs w = worst_case_snrs_widely(DetectionCase::B, s0, k, m, e);
                return pd_dual_exponential(w.snr1, w.snr2, gamma);
            };
            double grid_best = -1.0;
            for (int i = 0; i <= 1000; ++i) {
                grid_best = std::max(grid_best, worst(i / 1000.0));
            }
            const double eps = optimal_split_widely(DetectionCase::B, s0, k, m, gamma);
            CHECK(worst(eps) >= grid_best - 1e-12);
        }
    }
    m.law = FluctuationLaw::Gamma;
    CHECK_THROWS_AS(optimal_split_widely(DetectionCase::B, 1.0, 1.0, m, gamma), UnsupportedError);
}

TEST_CASE("worst case uses the lower bounds") {
    FluctuationModel m;
    m.sigma_mean = 2.0;
    m.sigma_s_mean = 2.0;
    m.sigma_bounds = {1.0, 3.0};
    m.sigma_s_bounds = {0.5, 3.0};
    const WorstCaseSnrs w = worst_case_snrs_widely(DetectionCase::B, 10.0, 2.0, m, 0.5);
    CHECK(w.snr1 == doctest::Approx(0.5 * 10.0 * 0.5));
    CHECK(w.snr2 == doctest::Approx(0.5 * 10.0 * 2.0 * 0.25));
    m.sigma_bounds = {2.5, 3.0};
    CHECK_THROWS_AS(m.validate(), ConfigError);
}

TEST_CASE("approximations") {
    ApproximationInputs in{2.0, 2.0, 700.0};
    CHECK(approx_gain(100.0, 100.0, 700.0, in) == doctest::Approx(1.0));
    CHECK(approx_gain(100.0, 120.0, 900.0, in) == doctest::Approx(100.0 * 100.0 * 700.0 / (120.0 * 120.0 * 900.0)));
    in.a_rs = 4.0;
    CHECK(approx_gain(100.0, 100.0, 700.0, in) == doctest::Approx(0.5));
    in.a_sr = 0.0;
    CHECK_THROWS_AS(approx_gain(100.0, 100.0, 700.0, in), DomainError);

    CHECK(indirect_radar_equation_snr(1, 1, 1, 1, 1, 1, 1, 1) == doctest::Approx(std::pow(4.0 * kPi, -3.0)));
    CHECK(indirect_radar_equation_snr(1, 1, 1, 1, 1, 1, 1, 1) == doctest::Approx(5.04e-4).epsilon(1e-3));
    const double alpha = direct_amplitude(2.0, 800.0, 0.1, 300.0);
    CHECK(indirect_radar_equation_snr(2.0, 800.0, 800.0, 0.1, 300.0, 300.0, 3.0, 0.5) ==
          doctest::Approx(snr0(alpha, 3.0, 0.5)).epsilon(1e-12));
}

TEST_CASE("decibels") {
    CHECK(to_db(100.0) == doctest::Approx(20.0));
    CHECK(from_db(to_db(3.7)) == doctest::Approx(3.7));
}

}  // TEST_SUITE

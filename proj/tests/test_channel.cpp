#include <doctest.h>

#include <random>

#include "risradar/channel.hpp"
#include "risradar/error.hpp"
#include "risradar/scenario.hpp"
#include "support.hpp"

using namespace risradar;

TEST_SUITE("channel") {

TEST_CASE("element rcs model") {
    CHECK(element_rcs_model(0.1, {0, 0}, {0, 0}) == doctest::Approx(kPi * 0.0025));
    CHECK(element_rcs_model(0.1, {0, 0}, {0, 0}) == doctest::Approx(7.854e-3).epsilon(1e-4));
    CHECK(element_rcs_model(0.1, {kPi / 2.0, 0}, {0, 0}) == 0.0);
    CHECK(element_rcs_model(0.1, {0, 0}, {0, 0}) / element_rcs_model(0.1, {kPi / 3.0, 0}, {0, 0}) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(element_rcs_model(0.1, {0, 0.4}, {0.3, -0.2}) == element_rcs_model(0.1, {0.3, -0.2}, {0, 0.4}));
}

TEST_CASE("direct amplitude") {
    const double unit = direct_amplitude(1, 1, 1, 1);
    CHECK(unit == doctest::Approx(std::pow(4.0 * kPi, -1.5)));
    CHECK(unit == doctest::Approx(0.022446).epsilon(1e-4));
    CHECK(direct_amplitude(1, 1, 1, 2) == doctest::Approx(unit / 4.0));
    CHECK(direct_amplitude(1, 2, 1, 1) == doctest::Approx(unit * 2.0));
    CHECK_THROWS_AS(direct_amplitude(1, 1, 1, 0), DomainError);
}

TEST_CASE("indirect amplitude") {
    CHECK(indirect_amplitude(1, 1, 1, 1, 1, 1, 1, 1) == doctest::Approx(std::pow(4.0 * kPi, -2.0)));
    CHECK(indirect_amplitude(1, 1, 1, 1, 1, 1, 1, 1) == doctest::Approx(6.333e-3).epsilon(1e-3));
    CHECK(indirect_amplitude(1, 1, 1, 1, 0, 1, 1, 1) == 0.0);
    CHECK_THROWS_AS(indirect_amplitude(1, 1, 1, 1, 1, 1, 0, 1), DomainError);
}

TEST_CASE("link budget invariants on random scenes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        ScenarioInputs in = test::random_inputs(rng);
        const Scenario s = build_scenario(in);
        REQUIRE(s.budget.alpha_sr.size() == s.scene.geometry.element_count());
        for (std::size_t l = 0; l < s.budget.alpha_sr.size(); ++l) {
            CHECK(s.budget.alpha_sr[l] == s.budget.alpha_st[l]);
            CHECK(s.budget.alpha_sr[l] >= 0.0);
        }
        in.transmit_power *= 4.0;
        const Scenario louder = build_scenario(in);
        CHECK(louder.budget.alpha == doctest::Approx(2.0 * s.budget.alpha).epsilon(1e-12));
        for (std::size_t l = 0; l < s.budget.alpha_sr.size(); l += 7) {
            CHECK(louder.budget.alpha_sr[l] == doctest::Approx(2.0 * s.budget.alpha_sr[l]).epsilon(1e-12));
        }
    }
}

TEST_CASE("link budget rejects non-positive powers") {
    const Scenario s = build_scenario(test::simple_inputs());
    CHECK_THROWS_AS(compute_link_budget(s.scene, s.antennas, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(compute_link_budget(s.scene, s.antennas, 1.0, -1.0), ConfigError);
}

TEST_CASE("phase wrapping") {
    CHECK(wrap_phase(-kPi / 2.0) == doctest::Approx(1.5 * kPi));
    CHECK(wrap_phase(kTwoPi) == doctest::Approx(0.0));
    CHECK(wrap_phase(-1e-300) >= 0.0);
    CHECK(wrap_phase(-1e-300) < kTwoPi);
    for (int k = 1; k < 50; ++k) {
        const double p = propagation_phase(k * 0.125, 0.125);
        CHECK((p < 1e-9 || p > kTwoPi - 1e-9));
    }
}

TEST_CASE("phase decomposition") {
    GeometryConfig g;
    g.ris_center = {0, 0, 0};
    g.ris_normal = Vec3{0, 1, 0};
    g.radar_position = {0, 30, 0};
    g.target_position = {0, 3000, 0};
    g.ris_side = 0.1;  // two elements per side
    g.wavelength = 0.1;
    g.bandwidth = 1e6;
    g.radar_aperture_target = g.radar_aperture_ris = g.target_size = 1.0;
    const Scene scene = build_geometry(g);
    const ChannelPhases widely = phase_decomposition(scene, SpacingRegime::Widely);
    CHECK(widely.psi_t_dprime[0] == 0.0);
    CHECK(&widely.known_target_phases() == &widely.psi_t_dprime);
    const ChannelPhases closely = phase_decomposition(scene, SpacingRegime::Closely);
    CHECK(&closely.known_target_phases() == &closely.psi_t_prime);
    CHECK_THROWS_AS(phase_decomposition(scene, SpacingRegime::Indeterminate).known_target_phases(),
                    UnsupportedError);

    for (std::size_t l = 0; l < scene.derived.d_t_l.size(); ++l) {
        const double expected = std::remainder(-kTwoPi * (scene.derived.d_t_l[l] - scene.derived.d_t_l[0]) / 0.1, kTwoPi);
        CHECK(std::remainder(widely.psi_t_dprime[l] - expected, kTwoPi) == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("half-wavelength path difference flips the phase") {
    const double lambda = 0.1;
    const double a = propagation_phase(1000.0, lambda);
    const double b = propagation_phase(1000.0 + lambda / 2.0, lambda);
    CHECK(std::abs(std::remainder(a - b, kTwoPi)) == doctest::Approx(kPi).epsilon(1e-9));
}

TEST_CASE("closely phase differences are free of the common target phase") {
    const Scenario s = build_scenario(test::simple_inputs(0.3, 3000.0, 30.0), SpacingRegime::Closely);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    const auto& known = s.phases.psi_t_prime;
    for (int draw = 0; draw < 2; ++draw) {
        const double beta = u(rng);
        for (std::size_t l = 1; l < known.size(); l += 5) {
            const double with_beta = (known[l] + beta) - (known[0] + beta);
            CHECK(std::remainder(with_beta - (known[l] - known[0]), kTwoPi) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

}  // TEST_SUITE

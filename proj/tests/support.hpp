#pragma once

#include <cmath>
#include <random>

#include "risradar/scenario.hpp"

namespace risradar::test {

// Radar at the origin looking down +x at a target; RIS offset along +y at
// distance `offset`, facing the bisector.
inline ScenarioInputs simple_inputs(double ris_side = 0.5, double range = 400.0, double offset = 30.0) {
    ScenarioInputs in;
    GeometryConfig& g = in.geometry;
    g.radar_position = {0.0, 0.0, 0.0};
    g.target_position = {range, 0.0, 0.0};
    g.ris_center = {0.0, offset, 0.0};
    g.ris_side = ris_side;
    g.wavelength = 0.1;
    g.bandwidth = 10e6;
    g.radar_aperture_target = 1.0;
    g.radar_aperture_ris = 1.0;
    g.target_size = 1.0;
    return in;
}

// A randomized but well-conditioned scene: everything in front of everything.
inline ScenarioInputs random_inputs(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> range(200.0, 2000.0);
    std::uniform_real_distribution<double> offset(25.0, 80.0);
    std::uniform_real_distribution<double> side(0.3, 1.2);
    ScenarioInputs in = simple_inputs(side(rng), range(rng), offset(rng));
    in.geometry.target_position.y = 20.0 * u(rng);
    in.geometry.target_position.z = 20.0 * u(rng);
    in.geometry.ris_center.z = 5.0 * u(rng);
    in.transmit_power = 1.0 + 9.0 * (0.5 + 0.5 * u(rng));
    return in;
}

}  // namespace risradar::test

#pragma once

#include "risradar/antenna.hpp"
#include "risradar/channel.hpp"
#include "risradar/geometry.hpp"
#include "risradar/ris.hpp"
#include "risradar/snr.hpp"

namespace risradar {

struct ScenarioInputs {
    GeometryConfig geometry;
    double transmit_power = 1.0;  // P_r [W]
    double noise_power = 1.0;     // P_w [W]
    double closeness_factor = kDefaultClosenessFactor;
};

// Everything the deterministic chain derives from one scene: link budget,
// regime, known phases, aligned program and gains.
struct Scenario {
    Scene scene;
    RadarAntennas antennas;
    LinkBudget budget;
    SpacingRegime regime;
    ChannelPhases phases;
    GainFactors gains;
};

Scenario build_scenario(const ScenarioInputs& inputs);

// A scenario always computes both decompositions; this one overrides the
// classified regime (e.g. to study alignment rules on an indeterminate scene).
Scenario build_scenario(const ScenarioInputs& inputs, SpacingRegime regime);

}  // namespace risradar

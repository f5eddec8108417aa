#include "risradar/scenario.hpp"

namespace risradar {

Scenario build_scenario(const ScenarioInputs& inputs, SpacingRegime regime) {
    Scene scene = build_geometry(inputs.geometry);
    RadarAntennas antennas = make_radar_antennas(scene);
    LinkBudget budget = compute_link_budget(scene, antennas, inputs.transmit_power, inputs.noise_power);
    ChannelPhases phases = phase_decomposition(scene, regime);
    const GainFactors k = gains(budget);
    return Scenario{std::move(scene), std::move(antennas), std::move(budget), regime, std::move(phases), k};
}

Scenario build_scenario(const ScenarioInputs& inputs) {
    const Scene probe = build_geometry(inputs.geometry);
    return build_scenario(inputs, classify_spacing(probe, inputs.closeness_factor));
}

}  // namespace risradar

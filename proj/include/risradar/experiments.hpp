#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "risradar/config.hpp"
#include "risradar/detection.hpp"
#include "risradar/geometry.hpp"
#include "risradar/montecarlo.hpp"
#include "risradar/scenario.hpp"
#include "risradar/snr.hpp"

namespace risradar {

struct RadarSettings {
    double carrier_frequency = 3e9;
    double transmit_power = 1.0;
    double noise_power = 1.0;
    double aperture_target = 1.0;
    double aperture_ris = 1.0;
    double bandwidth = 10e6;
    Vec3 position{};
};

struct TargetSettings {
    std::optional<Vec3> position;
    double size = 1.0;
    FluctuationModel fluctuation;
};

struct RisSettings {
    std::optional<Vec3> center;     // explicit placement wins
    std::optional<Vec3> direction;  // otherwise radar + direction * distance
    std::optional<double> distance; // unset: beam-fill distance for the side
    std::optional<Vec3> normal;     // unset: bisector toward radar and target
    double side = 2.0;
    double closeness_factor = kDefaultClosenessFactor;
};

struct DetectionSettings {
    DetectionCase detection_case = DetectionCase::A;
    double pfa = 1e-6;
    std::optional<double> epsilon;  // unset: optimal split
};

// Closely-spaced sweep: target at radar + range * direction, RIS center at
// radar - d_r * direction facing the radar, d_r from the beam-fill rule.
struct CloselyTableSettings {
    double range = 10000.0;
    Vec3 direction{0.0, 1.0, 0.0};
    std::vector<double> ris_sides{2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    double case_b_bandwidth = 10e6;
    double case_c_bandwidth = 1e6;
};

struct WidelyCurveSettings {
    std::vector<double> ris_sides{3.0, 5.0};
    double snr0_db_min = -10.0;
    double snr0_db_max = 30.0;
    double snr0_db_step = 1.0;
};

struct MonteCarloSettings {
    std::uint64_t seed = 20210611;
    std::uint64_t trials = 1000000;
};

struct ExperimentConfig {
    RadarSettings radar;
    TargetSettings target;
    RisSettings ris;
    DetectionSettings detection;
    CloselyTableSettings closely;
    WidelyCurveSettings widely;
    MonteCarloSettings montecarlo;

    double wavelength() const { return kSpeedOfLight / radar.carrier_frequency; }
};

ExperimentConfig parse_experiment_config(const ConfigDocument& doc);
ExperimentConfig load_experiment_config(const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Comma separated, LF line endings, header first.
    std::string to_string() const;
};

// 10 log10(linear), rounded half-up to two decimals.
std::string format_db(double linear);
std::string format_number(double value);

// Geometry for the scenario described by [radar], [target] and [ris].
ScenarioInputs scenario_inputs(const ExperimentConfig& config, double ris_side);

// The closely-table geometry for one RIS side.
ScenarioInputs closely_scenario_inputs(const ExperimentConfig& config, double ris_side, double bandwidth);

struct CloselyTableRow {
    double ris_side = 0.0;
    double d_r = 0.0;
    double path_difference = 0.0;
    GainFactors gains;
    double gain_a = 0.0;                  // linear SNR_a / SNR_0
    std::optional<double> gain_b;         // at the Case-b bandwidth, if Case b holds there
    std::optional<double> gain_c;         // at the Case-c bandwidth, if Case c holds there
    SpacingRegime regime = SpacingRegime::Closely;
    FarFieldReport far_field;
};

std::vector<CloselyTableRow> closely_table_rows(const ExperimentConfig& config);
CsvTable run_closely_table(const ExperimentConfig& config);

struct WidelyCurvePoint {
    double ris_side = 0.0;
    double snr0_db = 0.0;
    double k_st = 0.0;
    double pd_no_ris = 0.0;
    double pd_a = 0.0;
    double pd_b = 0.0;
    double pd_c = 0.0;
    double epsilon_b = 0.0;
    double epsilon_c = 0.0;
};

std::vector<WidelyCurvePoint> widely_curve_points(const ExperimentConfig& config);
CsvTable run_widely_curves(const ExperimentConfig& config);

enum class Expectation { Agree, Disagree };

struct ValidationPair {
    std::string name;
    double expected = 0.0;
    EmpiricalRate rate;
    Expectation expectation = Expectation::Agree;

    bool passed() const;
};

struct ValidationReport {
    std::vector<ValidationPair> pairs;
    bool all_passed() const;
    CsvTable table() const;
};

ValidationReport run_validation(const ExperimentConfig& config);

// The dual-observation exponential expression with its coefficients transposed,
// kept as the negative control for the Monte Carlo arbitration.
double pd_dual_exponential_transposed(double snr1, double snr2, double gamma);

std::string scenario_report(const ExperimentConfig& config);

}  // namespace risradar

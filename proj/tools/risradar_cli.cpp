// risradar command line front end.
//
//   risradar validate       --config FILE [--seed N] [--trials N] [--out FILE]
//   risradar closely-table  --config FILE [--out FILE]
//   risradar widely-curves  --config FILE [--out FILE]
//   risradar report         --config FILE
//
// Exit status: 0 success, 1 validation failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "risradar/error.hpp"
#include "risradar/experiments.hpp"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kConfigError = 2 };

struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, bool monte_carlo) {
    cmd->add_option("--config", c.config_path, "scenario configuration file")->required();
    cmd->add_option("--out", c.out_path, "write output here instead of stdout");
    if (monte_carlo) {
        cmd->add_option("--seed", c.seed, "Monte Carlo seed (overrides the config)");
        cmd->add_option("--trials", c.trials, "Monte Carlo trials per pair (overrides the config)")
            ->check(CLI::PositiveNumber);
    }
}

risradar::ExperimentConfig load(const Common& c) {
    risradar::ExperimentConfig config = risradar::load_experiment_config(c.config_path);
    if (c.seed) {
        config.montecarlo.seed = *c.seed;
    }
    if (c.trials) {
        config.montecarlo.trials = *c.trials;
    }
    return config;
}

void emit(const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) {
        throw risradar::ConfigError("cannot write '" + c.out_path + "'");
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-aided radar detection: link budgets, detection probabilities, Monte Carlo checks"};
    app.require_subcommand(1);

    Common common;
    CLI::App* validate = app.add_subcommand("validate", "closed form vs Monte Carlo arbitration");
    CLI::App* closely = app.add_subcommand("closely-table", "SNR gain table, closely-spaced geometry");
    CLI::App* widely = app.add_subcommand("widely-curves", "Pd curves, widely-spaced geometry");
    CLI::App* report = app.add_subcommand("report", "scenario summary: far field, regime, gains");
    add_common(validate, common, true);
    add_common(closely, common, false);
    add_common(widely, common, false);
    add_common(report, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        const risradar::ExperimentConfig config = load(common);
        if (*validate) {
            const risradar::ValidationReport r = risradar::run_validation(config);
            emit(common, r.table().to_string());
            for (const auto& p : r.pairs) {
                if (!p.passed()) {
                    std::cerr << "FAIL " << p.name << ": estimate " << p.rate.estimate << " vs expected "
                              << p.expected << " (" << p.rate.deviation_sigmas(p.expected) << " sigma)\n";
                }
            }
            std::cerr << (r.all_passed() ? "all pairs passed\n" : "validation failed\n");
            return r.all_passed() ? kOk : kValidationFailed;
        }
        if (*closely) {
            emit(common, risradar::run_closely_table(config).to_string());
        } else if (*widely) {
            emit(common, risradar::run_widely_curves(config).to_string());
        } else if (*report) {
            emit(common, risradar::scenario_report(config));
        }
        return kOk;
    } catch (const risradar::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "risradar/error.hpp"
#include "risradar/experiments.hpp"

namespace py = pybind11;
using namespace risradar;

namespace {

ExperimentConfig config_from(const std::string& text) {
    return parse_experiment_config(ConfigDocument::parse(text));
}

py::dict csv_columns(const CsvTable& table) {
    py::dict out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        py::list column;
        for (const auto& row : table.rows) {
            column.append(row[c]);
        }
        out[py::str(table.header[c])] = column;
    }
    return out;
}

DetectorKind detector_kind(const std::string& name) {
    if (name == "single") {
        return DetectorKind::SingleEnergy;
    }
    if (name == "dual") {
        return DetectorKind::DualEnergy;
    }
    throw ConfigError("detector kind must be 'single' or 'dual'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "RIS-aided radar detection: link budgets, detection probabilities, Monte Carlo checks";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

    m.def("threshold_from_pfa",
          [](const std::string& kind, double pfa) { return threshold_from_pfa(detector_kind(kind), pfa); },
          py::arg("kind"), py::arg("pfa"));
    m.def("pfa_from_threshold",
          [](const std::string& kind, double gamma) { return pfa_from_threshold(detector_kind(kind), gamma); },
          py::arg("kind"), py::arg("gamma"));
    m.def("marcum_q", &marcum_q, py::arg("a"), py::arg("b"));
    m.def("pd_single",
          [](const std::string& law, double snr, double gamma) {
              return pd_single(parse_fluctuation_law(law), snr, gamma);
          },
          py::arg("law"), py::arg("snr"), py::arg("gamma"));
    m.def("pd_dual_exponential", &pd_dual_exponential, py::arg("snr1"), py::arg("snr2"), py::arg("gamma"));
    m.def("optimal_split_closely",
          [](const std::string& c, double k_st) { return optimal_split_closely(parse_detection_case(c), k_st); },
          py::arg("case"), py::arg("k_st"));

    m.def("fill_distance",
          [](double aperture, double wavelength, double ris_side) {
              return fill_distance(SquareArrayAntenna(aperture, wavelength, Frame::from_normal({0, 0, 1})), ris_side);
          },
          py::arg("aperture"), py::arg("wavelength"), py::arg("ris_side"));
    m.def("half_power_beamwidth",
          [](double aperture, double wavelength) {
              return half_power_beamwidth(SquareArrayAntenna(aperture, wavelength, Frame::from_normal({0, 0, 1})));
          },
          py::arg("aperture"), py::arg("wavelength"));

    // Experiments take the configuration as text, in the same format as the CLI files.
    m.def("closely_table", [](const std::string& text) { return csv_columns(run_closely_table(config_from(text))); },
          py::arg("config") = "");
    m.def("widely_curves", [](const std::string& text) { return csv_columns(run_widely_curves(config_from(text))); },
          py::arg("config"));
    m.def("scenario_report", [](const std::string& text) { return scenario_report(config_from(text)); },
          py::arg("config") = "");
    m.def(
        "validate",
        [](const std::string& text) {
            const ValidationReport r = [&] {
                py::gil_scoped_release release;
                return run_validation(config_from(text));
            }();
            return py::make_tuple(r.all_passed(), csv_columns(r.table()));
        },
        py::arg("config") = "");
}

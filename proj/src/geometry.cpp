#include "risradar/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "risradar/error.hpp"

namespace risradar {

namespace {

void require_positive(double value, const char* name) {
    if (!(std::isfinite(value) && value > 0.0)) {
        throw ConfigError(std::string(name) + " must be positive and finite");
    }
}

void require_distinct(const Vec3& a, const Vec3& b, const char* what) {
    if (!(distance(a, b) > 0.0)) {
        throw ConfigError(std::string("coincident points: ") + what);
    }
}

}  // namespace

Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(std::isfinite(n) && n > 0.0)) {
        throw ConfigError("cannot normalize a zero or non-finite vector");
    }
    return v * (1.0 / n);
}

Frame Frame::from_normal(const Vec3& normal) {
    const Vec3 n = normalized(normal);
    Vec3 up{0.0, 0.0, 1.0};
    if (std::abs(dot(up, n)) > 0.999) {
        up = {1.0, 0.0, 0.0};
    }
    const Vec3 a1 = normalized(cross(n, up));
    const Vec3 a2 = cross(n, a1);
    return {a1, a2, n};
}

AzEl direction_angles(const Frame& frame, const Vec3& direction) {
    const Vec3 u = normalized(direction);
    const double p = dot(u, frame.axis1);
    const double q = dot(u, frame.axis2);
    const double r = dot(u, frame.normal);
    return {std::atan2(p, r), std::atan2(q, std::hypot(p, r))};
}

Vec3 direction_from_angles(const Frame& frame, const AzEl& angles) {
    const double ce = std::cos(angles.elevation);
    return frame.axis1 * (std::sin(angles.azimuth) * ce) + frame.axis2 * std::sin(angles.elevation) +
           frame.normal * (std::cos(angles.azimuth) * ce);
}

Scene build_geometry(const GeometryConfig& config) {
    if (!is_finite(config.radar_position) || !is_finite(config.target_position) ||
        !is_finite(config.ris_center)) {
        throw ConfigError("positions must be finite");
    }
    require_positive(config.ris_side, "ris side");
    require_positive(config.wavelength, "wavelength");
    require_positive(config.bandwidth, "bandwidth");
    require_positive(config.radar_aperture_target, "radar aperture (target)");
    require_positive(config.radar_aperture_ris, "radar aperture (RIS)");
    require_positive(config.target_size, "target size");
    require_distinct(config.radar_position, config.target_position, "radar and target");
    require_distinct(config.radar_position, config.ris_center, "radar and RIS center");
    require_distinct(config.ris_center, config.target_position, "RIS center and target");

    Scene scene;
    ScenarioGeometry& g = scene.geometry;
    g.radar_position = config.radar_position;
    g.target_position = config.target_position;
    g.ris_center = config.ris_center;
    g.ris_side = config.ris_side;
    g.wavelength = config.wavelength;
    g.bandwidth = config.bandwidth;
    g.radar_aperture_target = config.radar_aperture_target;
    g.radar_aperture_ris = config.radar_aperture_ris;
    g.target_size = config.target_size;
    g.ris_element_spacing = config.wavelength / 2.0;

    Vec3 normal;
    if (config.ris_normal) {
        normal = normalized(*config.ris_normal);
    } else {
        const Vec3 to_radar = normalized(config.radar_position - config.ris_center);
        const Vec3 to_target = normalized(config.target_position - config.ris_center);
        normal = normalized(to_radar + to_target);
    }
    g.ris_frame = Frame::from_normal(normal);

    const long n = std::lround(config.ris_side / g.ris_element_spacing);
    if (n < 1) {
        throw ConfigError("RIS side is smaller than one element");
    }
    g.elements_per_side = static_cast<std::size_t>(n);
    g.element_positions.reserve(g.elements_per_side * g.elements_per_side);
    const double half = (static_cast<double>(n) - 1.0) / 2.0;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const double u = (static_cast<double>(i) - half) * g.ris_element_spacing;
            const double v = (static_cast<double>(j) - half) * g.ris_element_spacing;
            g.element_positions.push_back(g.ris_center + g.ris_frame.axis1 * u + g.ris_frame.axis2 * v);
        }
    }

    DerivedGeometry& d = scene.derived;
    d.rho = distance(g.radar_position, g.target_position);
    d.d_r = distance(g.radar_position, g.ris_center);
    d.d_t = distance(g.ris_center, g.target_position);
    d.d_r_l.reserve(g.element_count());
    d.d_t_l.reserve(g.element_count());
    d.angles_radar_l.reserve(g.element_count());
    for (const Vec3& e : g.element_positions) {
        const double dr = distance(g.radar_position, e);
        const double dt = distance(e, g.target_position);
        if (!(dr > 0.0) || !(dt > 0.0)) {
            throw ConfigError("an RIS element coincides with the radar or the target");
        }
        d.d_r_l.push_back(dr);
        d.d_t_l.push_back(dt);
        d.angles_radar_l.push_back(direction_angles(g.ris_frame, g.radar_position - e));
    }

    const Vec3 to_radar = normalized(g.radar_position - g.target_position);
    const Vec3 to_ris = normalized(g.ris_center - g.target_position);
    d.xi = std::acos(std::clamp(dot(to_radar, to_ris), -1.0, 1.0));
    d.angles_target = direction_angles(g.ris_frame, g.target_position - g.ris_center);
    return scene;
}

FarFieldReport validate_far_field(const Scene& scene) {
    const ScenarioGeometry& g = scene.geometry;
    const DerivedGeometry& d = scene.derived;
    const double lambda = g.wavelength;
    const auto sq = [](double v) { return v * v; };
    const auto check = [](double attained, double required) {
        return FarFieldCondition{attained >= required, attained, required};
    };
    const double min_dt = d.d_t_l.empty() ? d.d_t : *std::min_element(d.d_t_l.begin(), d.d_t_l.end());
    const double min_dr = d.d_r_l.empty() ? d.d_r : *std::min_element(d.d_r_l.begin(), d.d_r_l.end());

    FarFieldReport report;
    report.radar_target = check(d.rho, 2.0 * std::max(sq(g.radar_aperture_target), sq(g.target_size)) / lambda);
    report.ris_target = check(min_dt, 2.0 * std::max(sq(g.target_size), sq(g.ris_side)) / lambda);
    report.radar_ris = check(min_dr, 2.0 * sq(g.radar_aperture_ris) / lambda);
    return report;
}

SpacingRegime classify_spacing(double xi, double wavelength, double target_size, double closeness_factor) {
    if (!(target_size > 0.0)) {
        throw ConfigError("target size must be positive to classify spacing");
    }
    if (!(wavelength > 0.0) || !(closeness_factor > 0.0) || closeness_factor > 1.0) {
        throw ConfigError("invalid wavelength or closeness factor");
    }
    const double lobe = wavelength / target_size;
    if (xi >= lobe) {
        return SpacingRegime::Widely;
    }
    if (xi <= closeness_factor * lobe) {
        return SpacingRegime::Closely;
    }
    return SpacingRegime::Indeterminate;
}

SpacingRegime classify_spacing(const Scene& scene, double closeness_factor) {
    return classify_spacing(scene.derived.xi, scene.geometry.wavelength, scene.geometry.target_size,
                            closeness_factor);
}

double path_difference(const DerivedGeometry& derived) {
    return derived.d_t + derived.d_r - derived.rho;
}

DetectionCase classify_delay_case(const Scene& scene, const BeamConfig& beams) {
    if (beams.transmit_beams == 1 && beams.receive_beams == 2) {
        return DetectionCase::A;
    }
    if (beams.transmit_beams != 2 || beams.receive_beams != 1) {
        throw ConfigError("beam configuration must be 1 Tx + 2 Rx or 2 Tx + 1 Rx");
    }
    const double range_resolution = scene.geometry.speed_of_light / scene.geometry.bandwidth;
    const double excess = path_difference(scene.derived);
    if (excess >= range_resolution) {
        return DetectionCase::B;
    }
    if (excess <= range_resolution / 4.0) {
        return DetectionCase::C;
    }
    throw UnsupportedError("path difference " + std::to_string(excess) +
                           " m lies between c/(4W) and c/W; neither resolvable nor unresolvable");
}

std::string to_string(SpacingRegime regime) {
    switch (regime) {
        case SpacingRegime::Closely: return "closely";
        case SpacingRegime::Widely: return "widely";
        case SpacingRegime::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string to_string(DetectionCase c) {
    switch (c) {
        case DetectionCase::A: return "a";
        case DetectionCase::B: return "b";
        case DetectionCase::C: return "c";
    }
    return "?";
}

DetectionCase parse_detection_case(const std::string& text) {
    if (text == "a" || text == "A") return DetectionCase::A;
    if (text == "b" || text == "B") return DetectionCase::B;
    if (text == "c" || text == "C") return DetectionCase::C;
    throw ConfigError("unknown detection case '" + text + "'");
}

}  // namespace risradar

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace risradar {

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Throws ConfigError on a zero or non-finite vector.
Vec3 normalized(const Vec3& v);

// Right-handed orthonormal frame: two in-plane axes and the normal (boresight).
struct Frame {
    Vec3 axis1;
    Vec3 axis2;
    Vec3 normal;

    // axis1 = normal x up (up = +z unless nearly parallel to the normal, then +x),
    // axis2 = axis1 x normal.
    static Frame from_normal(const Vec3& normal);
};

// Azimuth/elevation of a direction in a frame. Azimuth is the angle from the
// normal toward axis1 in the (axis1, normal) plane; elevation is the angle out
// of that plane toward axis2. Broadside is (0, 0); |azimuth| > pi/2 is behind.
struct AzEl {
    double azimuth = 0.0;
    double elevation = 0.0;
};

AzEl direction_angles(const Frame& frame, const Vec3& direction);

// Unit direction for the given angles in the frame.
Vec3 direction_from_angles(const Frame& frame, const AzEl& angles);

struct GeometryConfig {
    Vec3 radar_position;
    Vec3 target_position;
    Vec3 ris_center;
    // Unset: the bisector of the directions from the RIS center to radar and target.
    std::optional<Vec3> ris_normal;
    double ris_side = 0.0;              // D_s [m]
    double wavelength = 0.0;            // [m]
    double bandwidth = 0.0;             // W [Hz]
    double radar_aperture_target = 0.0; // D_rt [m]
    double radar_aperture_ris = 0.0;    // D_rs [m]
    double target_size = 0.0;           // D_t [m]
};

struct ScenarioGeometry {
    Vec3 radar_position;
    Vec3 target_position;
    Vec3 ris_center;
    Frame ris_frame;
    double ris_side = 0.0;
    double ris_element_spacing = 0.0;
    std::size_t elements_per_side = 0;
    std::vector<Vec3> element_positions;
    double wavelength = 0.0;
    double bandwidth = 0.0;
    double radar_aperture_target = 0.0;
    double radar_aperture_ris = 0.0;
    double target_size = 0.0;
    double speed_of_light = kSpeedOfLight;

    std::size_t element_count() const { return element_positions.size(); }
};

struct DerivedGeometry {
    double rho = 0.0;  // radar-target
    double d_r = 0.0;  // radar-RIS center
    double d_t = 0.0;  // RIS center-target
    std::vector<double> d_r_l;
    std::vector<double> d_t_l;
    double xi = 0.0;   // angle at the target between radar and RIS center
    AzEl angles_target;                // target direction seen from the RIS
    std::vector<AzEl> angles_radar_l;  // radar direction seen from element l
};

struct Scene {
    ScenarioGeometry geometry;
    DerivedGeometry derived;
};

Scene build_geometry(const GeometryConfig& config);

struct FarFieldCondition {
    bool holds = false;
    double attained = 0.0;
    double required = 0.0;
    double ratio() const { return required > 0.0 ? attained / required : INFINITY; }
};

struct FarFieldReport {
    FarFieldCondition radar_target;  // rho >= 2 max{D_rt^2, D_t^2} / lambda
    FarFieldCondition ris_target;    // min d_t,l >= 2 max{D_t^2, D_s^2} / lambda
    FarFieldCondition radar_ris;     // min d_r,l >= 2 D_rs^2 / lambda
    bool all_hold() const { return radar_target.holds && ris_target.holds && radar_ris.holds; }
};

FarFieldReport validate_far_field(const Scene& scene);

enum class SpacingRegime { Closely, Widely, Indeterminate };

inline constexpr double kDefaultClosenessFactor = 0.1;

SpacingRegime classify_spacing(double xi, double wavelength, double target_size,
                               double closeness_factor = kDefaultClosenessFactor);
SpacingRegime classify_spacing(const Scene& scene,
                               double closeness_factor = kDefaultClosenessFactor);

enum class DetectionCase { A, B, C };

struct BeamConfig {
    int transmit_beams = 1;
    int receive_beams = 2;
};

// Path-length excess of the RIS route over the direct route, d_t + d_r - rho.
double path_difference(const DerivedGeometry& derived);

// One Tx + two Rx -> Case a. Two Tx + one Rx -> Case b when the excess path is at
// least one range resolution c/W, Case c when it is within half a range cell
// c/(4W); anything in between throws UnsupportedError.
DetectionCase classify_delay_case(const Scene& scene, const BeamConfig& beams);

std::string to_string(SpacingRegime regime);
std::string to_string(DetectionCase c);
DetectionCase parse_detection_case(const std::string& text);

}  // namespace risradar

#include "risradar/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "risradar/error.hpp"

namespace risradar {

namespace {

constexpr std::size_t kDirectivitySteps = 2048;

// The normalized pattern depends only on the element count, so the directivity
// integral is shared process-wide.
double cached_pattern_integral(const SquareArrayAntenna& antenna) {
    static std::mutex mutex;
    static std::map<std::size_t, double> integrals;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = integrals.find(antenna.elements_per_side());
    if (it == integrals.end()) {
        it = integrals.emplace(antenna.elements_per_side(),
                               integrate_pattern(antenna, kDirectivitySteps, kDirectivitySteps)).first;
    }
    return it->second;
}

}  // namespace

SquareArrayAntenna::SquareArrayAntenna(double side, double wavelength, Frame frame)
    : side_(side), wavelength_(wavelength), frame_(frame), elements_per_side_(0) {
    if (!(side > 0.0) || !(wavelength > 0.0)) {
        throw ConfigError("antenna side and wavelength must be positive");
    }
    const long n = std::lround(side / (wavelength / 2.0));
    if (n < 2) {
        throw ConfigError("antenna side " + std::to_string(side) + " m holds fewer than two elements");
    }
    elements_per_side_ = static_cast<std::size_t>(n);
    peak_gain_ = 4.0 * kPi / cached_pattern_integral(*this);
}

double SquareArrayAntenna::array_factor_power(double direction_cosine) const {
    // lambda/2 spacing: inter-element phase is pi * u.
    const double half_phase = kPi * direction_cosine / 2.0;
    const double n = static_cast<double>(elements_per_side_);
    const double den = n * std::sin(half_phase);
    if (std::abs(den) < 1e-15) {
        return 1.0;
    }
    const double af = std::sin(n * half_phase) / den;
    return af * af;
}

double SquareArrayAntenna::normalized_pattern(double azimuth, double elevation) const {
    if (std::abs(azimuth) >= kPi / 2.0 || std::abs(elevation) >= kPi / 2.0) {
        return 0.0;
    }
    const double ce = std::cos(elevation);
    const double p = std::sin(azimuth) * ce;
    const double q = std::sin(elevation);
    return array_factor_power(p) * array_factor_power(q) * std::cos(azimuth) * ce;
}

double SquareArrayAntenna::gain_toward(const Vec3& direction) const {
    const AzEl a = direction_angles(frame_, direction);
    return gain(a.azimuth, a.elevation);
}

double integrate_pattern(const SquareArrayAntenna& antenna, std::size_t theta_steps, std::size_t phi_steps) {
    // The pattern is even in both direction cosines, so one quadrant of phi suffices.
    const double dtheta = (kPi / 2.0) / static_cast<double>(theta_steps);
    const double dphi = (kPi / 2.0) / static_cast<double>(phi_steps);
    std::vector<double> cos_phi(phi_steps), sin_phi(phi_steps);
    for (std::size_t j = 0; j < phi_steps; ++j) {
        const double phi = (static_cast<double>(j) + 0.5) * dphi;
        cos_phi[j] = std::cos(phi);
        sin_phi[j] = std::sin(phi);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < theta_steps; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * dtheta;
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        double ring = 0.0;
        for (std::size_t j = 0; j < phi_steps; ++j) {
            ring += antenna.array_factor_power(st * cos_phi[j]) * antenna.array_factor_power(st * sin_phi[j]);
        }
        // Element pattern cos(az) cos(el) equals cos(theta) off boresight.
        total += ring * ct * st;
    }
    return 4.0 * total * dtheta * dphi;
}

double array_gain(const SquareArrayAntenna& antenna, double azimuth, double elevation) {
    return antenna.gain(azimuth, elevation);
}

double half_power_beamwidth(const SquareArrayAntenna& antenna) {
    const double n = static_cast<double>(antenna.elements_per_side());
    double lo = 0.0;
    double hi = std::asin(std::min(1.0, 2.0 / n));  // first null
    if (hi >= kPi / 2.0) {
        hi = std::nextafter(kPi / 2.0, 0.0);
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (antenna.normalized_pattern(mid, 0.0) > 0.5) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + hi;
}

double fill_distance(const SquareArrayAntenna& antenna, double ris_side) {
    if (!(ris_side > 0.0)) {
        throw ConfigError("RIS side must be positive");
    }
    return ris_side / half_power_beamwidth(antenna);
}

double footprint_area(const SquareArrayAntenna& antenna, double range) {
    const double w = range * half_power_beamwidth(antenna);
    return w * w;
}

}  // namespace risradar

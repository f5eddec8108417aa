#pragma once

#include <cstddef>

#include "risradar/geometry.hpp"

namespace risradar {

// Uniform n x n array with lambda/2 spacing and a cosine element pattern in
// azimuth and elevation. The peak gain is the numerically integrated
// directivity of the full pattern (front hemisphere only).
class SquareArrayAntenna {
public:
    // Boresight along frame.normal. Throws ConfigError when the side holds
    // fewer than two elements.
    SquareArrayAntenna(double side, double wavelength, Frame frame);

    double side() const { return side_; }
    double wavelength() const { return wavelength_; }
    std::size_t elements_per_side() const { return elements_per_side_; }
    const Frame& frame() const { return frame_; }
    double peak_gain() const { return peak_gain_; }

    // Pattern normalized to 1 at boresight; zero outside the front hemisphere.
    double normalized_pattern(double azimuth, double elevation) const;

    double gain(double azimuth, double elevation) const { return peak_gain_ * normalized_pattern(azimuth, elevation); }

    // Gain toward a world-frame direction vector.
    double gain_toward(const Vec3& direction) const;

    // Uniform-array factor power |AF|^2 / n^2 for a direction cosine along one axis.
    double array_factor_power(double direction_cosine) const;

private:
    double side_;
    double wavelength_;
    Frame frame_;
    std::size_t elements_per_side_;
    double peak_gain_ = 1.0;
};

// Integral of the normalized pattern over the sphere (midpoint rule in theta/phi).
double integrate_pattern(const SquareArrayAntenna& antenna, std::size_t theta_steps, std::size_t phi_steps);

double array_gain(const SquareArrayAntenna& antenna, double azimuth, double elevation);

// Full 3-dB beamwidth in the azimuth principal plane.
double half_power_beamwidth(const SquareArrayAntenna& antenna);

// Distance at which the (d * theta_3dB)^2 footprint equals a square RIS of side ris_side.
double fill_distance(const SquareArrayAntenna& antenna, double ris_side);

// Area (d * theta_3dB)^2 covered by the 3-dB beam at range d.
double footprint_area(const SquareArrayAntenna& antenna, double range);

}  // namespace risradar

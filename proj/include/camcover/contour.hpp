#pragma once

#include <vector>

#include "camcover/geometry.hpp"

namespace camcover {

/// Planar position plus the direction of the front-face normal.
/// The orientation is kept normalized to [0, 2pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double rho = 0.0;

    Pose() = default;
    Pose(double px, double py, double orientation)
        : x(px), y(py), rho(normalize_angle(orientation)) {}

    Vec2 position() const { return {x, y}; }
    Vec2 normal() const { return {std::cos(rho), std::sin(rho)}; }

    friend bool operator==(const Pose&, const Pose&) = default;
};

/// Deformation path of one contour point, discretized into uniformly
/// spaced samples over [t0, ts]. samples.front() is the pose before the
/// deformation starts, samples.back() the pose once it has settled.
struct Trajectory {
    int point_index = 1;  // 1-based index of the contour point
    std::vector<Pose> samples;
    double t0 = 0.0;
    double ts = 1.0;

    int sample_count() const { return static_cast<int>(samples.size()); }

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// The deforming object boundary: one trajectory per sampled contour point.
/// All trajectories share the same sample count and time interval.
struct DeformableContour {
    std::vector<Trajectory> trajectories;

    int point_count() const { return static_cast<int>(trajectories.size()); }
    int sample_count() const {
        return trajectories.empty() ? 0 : trajectories.front().sample_count();
    }

    friend bool operator==(const DeformableContour&, const DeformableContour&) = default;
};

/// Linear orientation interpolation between the first and last sample.
/// `m` is the 1-based sample index; endpoints are reproduced exactly.
/// Interpolation runs on the raw angle values and the result is wrapped
/// afterwards; no shortest-arc correction is applied.
double interpolate_orientation(double rho_first, double rho_last, int sample_count, int m);

/// Straight-line trajectory between two poses with `sample_count` uniformly
/// spaced samples. Both endpoints are reproduced bit-exactly.
Trajectory discretize_linear(const Pose& start, const Pose& end, int sample_count);

/// Resamples a polyline of waypoints to uniform arc-length spacing strictly
/// below `max_spacing`. Endpoint positions are preserved; orientations are
/// re-derived from the endpoint orientations.
Trajectory resample_to_spacing(const std::vector<Pose>& waypoints, double max_spacing);

/// Throws std::domain_error when a structural invariant is broken.
void validate(const Trajectory& trajectory);
void validate(const DeformableContour& contour);

}  // namespace camcover

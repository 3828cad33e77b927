#pragma once

#include <array>
#include <vector>

#include "camcover/contour.hpp"

namespace camcover {

/// Axis-aligned bounding rectangle of one trajectory's sample positions.
struct FeatureRect {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    int source_index = 1;

    /// Corner order: (x_min,y_min), (x_min,y_max), (x_max,y_min), (x_max,y_max).
    std::array<Vec2, 4> vertices() const {
        return {Vec2{x_min, y_min}, Vec2{x_min, y_max}, Vec2{x_max, y_min}, Vec2{x_max, y_max}};
    }

    bool contains(Vec2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    friend bool operator==(const FeatureRect&, const FeatureRect&) = default;
};

/// Rectangle corner standing in for a whole trajectory: its position is the
/// corner, its orientation is copied from the nearest trajectory sample.
struct FeaturePoint {
    Pose pose;
    int source_index = 1;  // trajectory k
    int vertex_index = 1;  // corner 1..4 in FeatureRect order

    friend bool operator==(const FeaturePoint&, const FeaturePoint&) = default;
};

FeatureRect bounding_rectangle(const Trajectory& trajectory);

/// Orientation of the sample closest to `vertex`; ties go to the earliest sample.
double assign_vertex_orientation(const Trajectory& trajectory, Vec2 vertex);

/// Emits the 4K feature points, four corners per trajectory, trajectories in
/// ascending order. Coincident corners of a degenerate rectangle are kept so
/// the count stays exactly 4K.
std::vector<FeaturePoint> select_feature_points(const DeformableContour& contour);

}  // namespace camcover

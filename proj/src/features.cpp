#include "camcover/features.hpp"

#include <stdexcept>

namespace camcover {

FeatureRect bounding_rectangle(const Trajectory& trajectory) {
    if (trajectory.samples.empty())
        throw std::domain_error("bounding_rectangle: trajectory has no samples");
    FeatureRect rect;
    rect.source_index = trajectory.point_index;
    rect.x_min = rect.x_max = trajectory.samples.front().x;
    rect.y_min = rect.y_max = trajectory.samples.front().y;
    for (const auto& sample : trajectory.samples) {
        rect.x_min = std::min(rect.x_min, sample.x);
        rect.x_max = std::max(rect.x_max, sample.x);
        rect.y_min = std::min(rect.y_min, sample.y);
        rect.y_max = std::max(rect.y_max, sample.y);
    }
    return rect;
}

double assign_vertex_orientation(const Trajectory& trajectory, Vec2 vertex) {
    if (trajectory.samples.empty())
        throw std::domain_error("assign_vertex_orientation: trajectory has no samples");
    double best_sq = squared_norm(trajectory.samples.front().position() - vertex);
    double best_rho = trajectory.samples.front().rho;
    for (std::size_t m = 1; m < trajectory.samples.size(); ++m) {
        const double sq = squared_norm(trajectory.samples[m].position() - vertex);
        if (sq < best_sq) {
            best_sq = sq;
            best_rho = trajectory.samples[m].rho;
        }
    }
    return best_rho;
}

std::vector<FeaturePoint> select_feature_points(const DeformableContour& contour) {
    if (contour.trajectories.empty())
        throw std::domain_error("select_feature_points: contour has no trajectories");
    std::vector<FeaturePoint> features;
    features.reserve(contour.trajectories.size() * 4);
    for (const auto& trajectory : contour.trajectories) {
        const FeatureRect rect = bounding_rectangle(trajectory);
        const auto corners = rect.vertices();
        for (int v = 0; v < 4; ++v) {
            FeaturePoint fp;
            fp.pose = Pose(corners[static_cast<std::size_t>(v)].x,
                           corners[static_cast<std::size_t>(v)].y,
                           assign_vertex_orientation(trajectory, corners[static_cast<std::size_t>(v)]));
            fp.source_index = trajectory.point_index;
            fp.vertex_index = v + 1;
            features.push_back(fp);
        }
    }
    return features;
}

}  // namespace camcover

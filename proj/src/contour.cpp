#include "camcover/contour.hpp"

#include <stdexcept>
#include <string>

namespace camcover {

double interpolate_orientation(double rho_first, double rho_last, int sample_count, int m) {
    if (sample_count < 2)
        throw std::domain_error("interpolate_orientation: sample_count must be >= 2");
    if (m < 1 || m > sample_count)
        throw std::domain_error("interpolate_orientation: sample index out of range");
    if (m == 1) return normalize_angle(rho_first);
    if (m == sample_count) return normalize_angle(rho_last);
    const double fraction = static_cast<double>(m - 1) / static_cast<double>(sample_count - 1);
    return normalize_angle(rho_first + (rho_last - rho_first) * fraction);
}

Trajectory discretize_linear(const Pose& start, const Pose& end, int sample_count) {
    if (sample_count < 2)
        throw std::domain_error("discretize_linear: sample_count must be >= 2");
    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(sample_count));
    for (int m = 1; m <= sample_count; ++m) {
        if (m == 1) {
            traj.samples.push_back(start);
        } else if (m == sample_count) {
            traj.samples.push_back(end);
        } else {
            const double f = static_cast<double>(m - 1) / static_cast<double>(sample_count - 1);
            const Vec2 pos = start.position() + f * (end.position() - start.position());
            traj.samples.emplace_back(pos.x, pos.y,
                                      interpolate_orientation(start.rho, end.rho, sample_count, m));
        }
    }
    return traj;
}

Trajectory resample_to_spacing(const std::vector<Pose>& waypoints, double max_spacing) {
    if (max_spacing <= 0.0)
        throw std::domain_error("resample_to_spacing: spacing threshold must be positive");
    if (waypoints.size() < 2)
        throw std::domain_error("resample_to_spacing: need at least two waypoints");

    // Cumulative arc length along the waypoint polyline.
    std::vector<double> arc(waypoints.size(), 0.0);
    for (std::size_t i = 1; i < waypoints.size(); ++i)
        arc[i] = arc[i - 1] + distance(waypoints[i - 1].position(), waypoints[i].position());
    const double total = arc.back();

    // segments = floor(total/max_spacing) + 1 guarantees spacing strictly below
    // the threshold, including when total is an exact multiple of it.
    const int segments = static_cast<int>(std::floor(total / max_spacing)) + 1;
    const int sample_count = segments + 1;

    Trajectory traj;
    traj.samples.reserve(static_cast<std::size_t>(sample_count));
    std::size_t cursor = 0;
    for (int m = 1; m <= sample_count; ++m) {
        const double rho =
            interpolate_orientation(waypoints.front().rho, waypoints.back().rho, sample_count, m);
        if (m == 1) {
            traj.samples.emplace_back(waypoints.front().x, waypoints.front().y, rho);
            continue;
        }
        if (m == sample_count) {
            traj.samples.emplace_back(waypoints.back().x, waypoints.back().y, rho);
            continue;
        }
        const double target = total * static_cast<double>(m - 1) / static_cast<double>(segments);
        while (cursor + 2 < waypoints.size() && arc[cursor + 1] < target) ++cursor;
        const double seg_len = arc[cursor + 1] - arc[cursor];
        const double f = seg_len > 0.0 ? (target - arc[cursor]) / seg_len : 0.0;
        const Vec2 pos = waypoints[cursor].position() +
                         f * (waypoints[cursor + 1].position() - waypoints[cursor].position());
        traj.samples.emplace_back(pos.x, pos.y, rho);
    }
    return traj;
}

void validate(const Trajectory& trajectory) {
    if (trajectory.sample_count() < 2)
        throw std::domain_error("trajectory " + std::to_string(trajectory.point_index) +
                                ": needs at least 2 samples");
    if (!(trajectory.ts > trajectory.t0) || trajectory.t0 < 0.0)
        throw std::domain_error("trajectory " + std::to_string(trajectory.point_index) +
                                ": time interval must satisfy ts > t0 >= 0");
}

void validate(const DeformableContour& contour) {
    if (contour.trajectories.empty())
        throw std::domain_error("contour: needs at least one trajectory");
    const auto& first = contour.trajectories.front();
    for (const auto& traj : contour.trajectories) {
        validate(traj);
        if (traj.sample_count() != first.sample_count() || traj.t0 != first.t0 ||
            traj.ts != first.ts)
            throw std::domain_error("contour: trajectories must share sample count and interval");
    }
}

}  // namespace camcover

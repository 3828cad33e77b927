#include "camcover/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "camcover/camera.hpp"

namespace camcover {

namespace {

std::string num(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.3f", v);
    return buffer;
}

struct Bounds {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    bool empty = true;

    void include(Vec2 p) {
        if (empty) {
            x_min = x_max = p.x;
            y_min = y_max = p.y;
            empty = false;
            return;
        }
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    }
};

/// World y grows upward, SVG y downward; flip once here.
std::string svg_point(Vec2 p) { return num(p.x) + "," + num(-p.y); }

std::string contour_polygon(const DeformableContour& contour, int sample_index,
                            const char* css_class) {
    std::string points;
    for (const Trajectory& trajectory : contour.trajectories) {
        const Pose& pose = trajectory.samples[static_cast<std::size_t>(sample_index - 1)];
        if (!points.empty()) points += ' ';
        points += svg_point(pose.position());
    }
    return std::string("  <polygon class=\"") + css_class + "\" points=\"" + points + "\"/>\n";
}

}  // namespace

std::string render_svg(const DeformableContour& contour, const Deployment& deployment,
                       int sample_index) {
    validate(contour);
    const int m_count = contour.sample_count();
    if (sample_index < 1 || sample_index > m_count)
        throw std::domain_error("render: sample index out of range");

    Bounds bounds;
    for (const Trajectory& trajectory : contour.trajectories)
        for (const Pose& pose : trajectory.samples) bounds.include(pose.position());
    for (const CameraConfig& camera : deployment.cameras) {
        bounds.include(camera.position());
        for (Vec2 corner : fov_polygon(camera, deployment.intrinsics)) bounds.include(corner);
    }

    const double margin = 0.06 * std::max(bounds.x_max - bounds.x_min, bounds.y_max - bounds.y_min) + 4.0;
    const double view_x = bounds.x_min - margin;
    const double view_y = -(bounds.y_max + margin);  // flipped axis: top edge is world y_max
    const double view_w = bounds.x_max - bounds.x_min + 2.0 * margin;
    const double view_h = bounds.y_max - bounds.y_min + 2.0 * margin;
    const double marker_radius = 0.006 * std::max(view_w, view_h);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(view_x) << ' '
        << num(view_y) << ' ' << num(view_w) << ' ' << num(view_h) << "\">\n";
    out << "  <style>\n"
           "    .fov { fill: #4a90d920; stroke: #4a90d9; stroke-width: 0.6; }\n"
           "    .contour-start { fill: none; stroke: #c0392b; stroke-width: 0.8; }\n"
           "    .contour-end { fill: none; stroke: #2950c0; stroke-width: 0.8; }\n"
           "    .covered { fill: #1e8449; }\n"
           "    .uncovered { fill: #c0392b; }\n"
           "    .camera { fill: #1a1a2e; stroke: none; }\n"
           "    .axis { stroke: #1a1a2e; stroke-width: 0.5; }\n"
           "  </style>\n";

    for (const CameraConfig& camera : deployment.cameras) {
        const auto corners = fov_polygon(camera, deployment.intrinsics);
        std::string points;
        for (Vec2 corner : corners) {
            if (!points.empty()) points += ' ';
            points += svg_point(corner);
        }
        out << "  <polygon class=\"fov\" points=\"" << points << "\"/>\n";
    }

    out << contour_polygon(contour, 1, "contour-start");
    out << contour_polygon(contour, m_count, "contour-end");

    if (!deployment.cameras.empty()) {
        for (const Trajectory& trajectory : contour.trajectories) {
            const Pose& pose = trajectory.samples[static_cast<std::size_t>(sample_index - 1)];
            const bool covered = point_covered(deployment, pose) == 1;
            out << "  <circle class=\"" << (covered ? "covered" : "uncovered") << "\" cx=\""
                << num(pose.x) << "\" cy=\"" << num(-pose.y) << "\" r=\"" << num(marker_radius)
                << "\"/>\n";
        }
        for (const CameraConfig& camera : deployment.cameras) {
            const Vec2 near_mid =
                camera.position() + deployment.intrinsics.d_min * camera.axis();
            out << "  <line class=\"axis\" x1=\"" << num(camera.x) << "\" y1=\"" << num(-camera.y)
                << "\" x2=\"" << num(near_mid.x) << "\" y2=\"" << num(-near_mid.y) << "\"/>\n";
            out << "  <circle class=\"camera\" cx=\"" << num(camera.x) << "\" cy=\""
                << num(-camera.y) << "\" r=\"" << num(1.5 * marker_radius) << "\"/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace camcover

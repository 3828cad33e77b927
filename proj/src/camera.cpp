#include "camcover/camera.hpp"

namespace camcover {

void validate(const CameraIntrinsics& intrinsics) {
    if (!(intrinsics.d_min > 0.0) || !(intrinsics.d_max > intrinsics.d_min))
        throw std::domain_error("intrinsics: need 0 < d_min < d_max");
    if (!(intrinsics.half_angle > 0.0) || !(intrinsics.half_angle < kPi / 2.0))
        throw std::domain_error("intrinsics: half_angle must lie in (0, pi/2)");
}

Vec2 world_to_camera(Vec2 world, const CameraConfig& camera) {
    const double c = std::cos(camera.theta);
    const double s = std::sin(camera.theta);
    const Vec2 rel = world - camera.position();
    return {c * rel.x + s * rel.y, -s * rel.x + c * rel.y};
}

Vec2 camera_to_world(Vec2 local, const CameraConfig& camera) {
    const double c = std::cos(camera.theta);
    const double s = std::sin(camera.theta);
    return camera.position() + Vec2{c * local.x - s * local.y, s * local.x + c * local.y};
}

bool in_fov(const CameraConfig& camera, const CameraIntrinsics& intrinsics, Vec2 point,
            double angle_eps) {
    // Depth band along the optical axis.
    const double depth = world_to_camera(point, camera).y;
    if (depth < intrinsics.d_min || depth > intrinsics.d_max) return false;

    // Cone around the optical axis. The projection of the camera-to-point
    // vector onto the axis equals the camera-frame depth, so the angular
    // bound reduces to depth >= |rel| * cos(half_angle).
    const Vec2 rel = point - camera.position();
    const double len = norm(rel);
    if (len == 0.0) return false;
    return depth >= len * std::cos(intrinsics.half_angle + angle_eps);
}

bool is_visible(const CameraConfig& camera, const CameraIntrinsics& intrinsics, const Pose& point,
                double angle_eps) {
    if (!in_fov(camera, intrinsics, point.position(), angle_eps)) return false;
    // Front face: angle between camera-to-point and the normal exceeds pi/2.
    const Vec2 rel = point.position() - camera.position();
    return dot(rel, point.normal()) < 0.0;
}

std::array<Vec2, 4> fov_polygon(const CameraConfig& camera, const CameraIntrinsics& intrinsics) {
    const double near_half = intrinsics.d_min * std::tan(intrinsics.half_angle);
    const double far_half = intrinsics.d_max * std::tan(intrinsics.half_angle);
    return {camera_to_world({-near_half, intrinsics.d_min}, camera),
            camera_to_world({near_half, intrinsics.d_min}, camera),
            camera_to_world({far_half, intrinsics.d_max}, camera),
            camera_to_world({-far_half, intrinsics.d_max}, camera)};
}

bool visible_oracle(const CameraConfig& camera, const CameraIntrinsics& intrinsics,
                    const Pose& point) {
    // Containment in the trapezoid, boundary inclusive. The polygon is
    // counterclockwise, so the point must sit on the left of every edge.
    const auto poly = fov_polygon(camera, intrinsics);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        if (cross(b - a, point.position() - a) < -1e-9) return false;
    }
    const Vec2 rel = point.position() - camera.position();
    if (rel == Vec2{0.0, 0.0}) return false;
    return dot(rel, point.normal()) < 0.0;
}

}  // namespace camcover

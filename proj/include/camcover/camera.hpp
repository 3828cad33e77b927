#pragma once

#include <array>
#include <stdexcept>

#include "camcover/contour.hpp"
#include "camcover/geometry.hpp"

namespace camcover {

/// Angular slack applied when comparing against the field-of-view cone at
/// its boundary. Purely a floating-point guard; the geometry is unchanged.
inline constexpr double kDefaultAngleEps = 1e-9;

/// Trapezoidal field of view: near/far base distances along the optical
/// axis and the half field angle between axis and leg.
struct CameraIntrinsics {
    double d_min = 30.0;
    double d_max = 80.0;
    double half_angle = deg_to_rad(26.0);

    friend bool operator==(const CameraIntrinsics&, const CameraIntrinsics&) = default;
};

void validate(const CameraIntrinsics& intrinsics);

/// One camera: position of the optical center and the direction of the
/// optical axis, measured like every other orientation in [0, 2pi).
/// The axis unit vector is [-sin theta, cos theta], i.e. theta = 0 looks
/// along +Y in the world frame.
struct CameraConfig {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    CameraConfig() = default;
    CameraConfig(double px, double py, double axis_angle)
        : x(px), y(py), theta(normalize_angle(axis_angle)) {}

    Vec2 position() const { return {x, y}; }
    Vec2 axis() const { return {-std::sin(theta), std::cos(theta)}; }

    friend bool operator==(const CameraConfig&, const CameraConfig&) = default;
};

/// World position -> camera frame: R(theta) * (s - v). In the camera frame
/// the optical axis is +Y, so the y component is the viewing depth.
Vec2 world_to_camera(Vec2 world, const CameraConfig& camera);

/// Inverse transform of world_to_camera.
Vec2 camera_to_world(Vec2 local, const CameraConfig& camera);

/// Positional part of the visibility test: depth within [d_min, d_max] and
/// angle from the optical axis at most half_angle (both bounds inclusive).
bool in_fov(const CameraConfig& camera, const CameraIntrinsics& intrinsics, Vec2 point,
            double angle_eps = kDefaultAngleEps);

/// Full visibility test for an oriented point. Requires in_fov and the
/// front-face condition: the angle between the camera-to-point vector and
/// the point normal must exceed pi/2, i.e. their dot product is negative.
/// A point coincident with the camera center is never visible.
bool is_visible(const CameraConfig& camera, const CameraIntrinsics& intrinsics, const Pose& point,
                double angle_eps = kDefaultAngleEps);

/// Corners of the field-of-view trapezoid in world coordinates, in
/// counterclockwise order starting at the near-left corner.
std::array<Vec2, 4> fov_polygon(const CameraConfig& camera, const CameraIntrinsics& intrinsics);

/// Independent re-derivation of is_visible used for cross-checking: point
/// containment in the fov_polygon trapezoid (boundary inclusive) combined
/// with the sign of the dot product against the point normal.
bool visible_oracle(const CameraConfig& camera, const CameraIntrinsics& intrinsics,
                    const Pose& point);

}  // namespace camcover

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "camcover/camera.hpp"
#include "camcover/rng.hpp"
#include "doctest.h"

using namespace camcover;

namespace {

const CameraIntrinsics kPaperIntr{30.0, 80.0, deg_to_rad(26.0)};

double shoelace_area(const std::array<Vec2, 4>& poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice;
}

CameraConfig random_camera(std::mt19937_64& rng) {
    return {uniform_in(rng, -100.0, 100.0), uniform_in(rng, -100.0, 100.0),
            uniform_in(rng, 0.0, kTwoPi)};
}

}  // namespace

TEST_CASE("world_to_camera rotates the offset into the camera frame") {
    const Vec2 a = world_to_camera({10, 25}, CameraConfig(10, 20, kPi / 2));
    CHECK(a.x == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(a.y == doctest::Approx(0.0).epsilon(1e-12));

    const Vec2 b = world_to_camera({7, -3}, CameraConfig(7, -3, 1.234));
    CHECK(b == Vec2{0, 0});

    const Vec2 c = world_to_camera({3, 4}, CameraConfig(0, 0, 0));
    CHECK(c.x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("world_to_camera and camera_to_world are inverse isometries") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const CameraConfig camera = random_camera(rng);
        const Vec2 p{uniform_in(rng, -200.0, 200.0), uniform_in(rng, -200.0, 200.0)};
        const Vec2 q{uniform_in(rng, -200.0, 200.0), uniform_in(rng, -200.0, 200.0)};
        const Vec2 pc = world_to_camera(p, camera);
        const Vec2 qc = world_to_camera(q, camera);
        CHECK(std::abs(distance(pc, qc) - distance(p, q)) < 1e-9);
        const Vec2 back = camera_to_world(pc, camera);
        CHECK(std::abs(back.x - p.x) < 1e-9);
        CHECK(std::abs(back.y - p.y) < 1e-9);
        CHECK(world_to_camera(camera.position(), camera) == Vec2{0, 0});
    }
}

TEST_CASE("is_visible matches the visibility definition case by case") {
    const CameraConfig camera(0, 0, 0);
    // On axis, inside the depth band, normal facing the camera.
    CHECK(is_visible(camera, kPaperIntr, Pose(0, 50, 3 * kPi / 2)));
    // Depth 20 in front of the near base.
    CHECK_FALSE(is_visible(camera, kPaperIntr, Pose(0, 20, 3 * kPi / 2)));
    // Off-axis angle arctan(30/50) = 30.96 degrees exceeds 26.
    CHECK_FALSE(is_visible(camera, kPaperIntr, Pose(30, 50, 3 * kPi / 2)));
    // Normal points away from the camera.
    CHECK_FALSE(is_visible(camera, kPaperIntr, Pose(0, 50, kPi / 2)));
    // Point at the optical center is never visible.
    CHECK_FALSE(is_visible(camera, kPaperIntr, Pose(0, 0, 0)));
}

TEST_CASE("near base boundary is inclusive") {
    const CameraConfig camera(0, 0, 0);
    const Pose on_near_base(0, 30, 3 * kPi / 2);
    CHECK(is_visible(camera, kPaperIntr, on_near_base));
    CHECK(visible_oracle(camera, kPaperIntr, on_near_base));
    const Pose on_far_base(0, 80, 3 * kPi / 2);
    CHECK(is_visible(camera, kPaperIntr, on_far_base));
    CHECK(visible_oracle(camera, kPaperIntr, on_far_base));
}

TEST_CASE("fov_polygon lays out the trapezoid corners") {
    const CameraIntrinsics wide{30.0, 80.0, deg_to_rad(45.0)};
    const auto poly = fov_polygon(CameraConfig(0, 0, 0), wide);
    CHECK(poly[0].x == doctest::Approx(-30.0).epsilon(1e-9));
    CHECK(poly[0].y == doctest::Approx(30.0).epsilon(1e-9));
    CHECK(poly[1].x == doctest::Approx(30.0).epsilon(1e-9));
    CHECK(poly[1].y == doctest::Approx(30.0).epsilon(1e-9));
    CHECK(poly[2].x == doctest::Approx(80.0).epsilon(1e-9));
    CHECK(poly[2].y == doctest::Approx(80.0).epsilon(1e-9));
    CHECK(poly[3].x == doctest::Approx(-80.0).epsilon(1e-9));
    CHECK(poly[3].y == doctest::Approx(80.0).epsilon(1e-9));

    // Half turn mirrors every corner through the camera position.
    const auto flipped = fov_polygon(CameraConfig(0, 0, kPi), wide);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(flipped[i].x == doctest::Approx(-poly[i].x).epsilon(1e-9));
        CHECK(flipped[i].y == doctest::Approx(-poly[i].y).epsilon(1e-9));
    }
}

TEST_CASE("fov_polygon area equals tan(alpha) * (d_max^2 - d_min^2) for any pose") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const CameraConfig camera = random_camera(rng);
        CameraIntrinsics intr;
        intr.d_min = uniform_in(rng, 5.0, 50.0);
        intr.d_max = intr.d_min + uniform_in(rng, 5.0, 80.0);
        intr.half_angle = uniform_in(rng, 0.05, 1.4);
        const double expected =
            std::tan(intr.half_angle) * (intr.d_max * intr.d_max - intr.d_min * intr.d_min);
        CHECK(shoelace_area(fov_polygon(camera, intr)) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("visible_oracle agrees with is_visible on the definition examples") {
    const CameraConfig camera(0, 0, 0);
    for (const Pose& p : {Pose(0, 50, 3 * kPi / 2), Pose(0, 20, 3 * kPi / 2),
                          Pose(30, 50, 3 * kPi / 2), Pose(0, 50, kPi / 2)})
        CHECK(visible_oracle(camera, kPaperIntr, p) == is_visible(camera, kPaperIntr, p));
}

TEST_CASE("visible_oracle agrees with is_visible on 10000 random draws") {
    std::mt19937_64 rng(2026);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        const CameraConfig camera = random_camera(rng);
        const Pose p(uniform_in(rng, -150.0, 150.0), uniform_in(rng, -150.0, 150.0),
                     uniform_in(rng, 0.0, kTwoPi));
        if (is_visible(camera, kPaperIntr, p) != visible_oracle(camera, kPaperIntr, p))
            ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("rigid motion of camera and point together preserves visibility") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const CameraConfig camera = random_camera(rng);
        // Bias points toward the field of view so both outcomes are exercised.
        const double depth = uniform_in(rng, 10.0, 100.0);
        const double off = uniform_in(rng, -60.0, 60.0);
        const Vec2 pos = camera_to_world({off, depth}, camera);
        const Pose p(pos.x, pos.y, uniform_in(rng, 0.0, kTwoPi));

        const double spin = uniform_in(rng, 0.0, kTwoPi);
        const Vec2 shift{uniform_in(rng, -40.0, 40.0), uniform_in(rng, -40.0, 40.0)};
        const double cs = std::cos(spin), sn = std::sin(spin);
        auto rotate = [&](Vec2 v) { return Vec2{cs * v.x - sn * v.y, sn * v.x + cs * v.y}; };

        const Vec2 cam_pos = rotate(camera.position()) + shift;
        const CameraConfig moved_cam(cam_pos.x, cam_pos.y, camera.theta + spin);
        const Vec2 p_pos = rotate(p.position()) + shift;
        const Pose moved_p(p_pos.x, p_pos.y, p.rho + spin);

        // Stay clear of the decision boundaries, where a rigid motion can
        // legitimately flip a borderline comparison.
        const Vec2 local = world_to_camera(p.position(), camera);
        const double len = norm(p.position() - camera.position());
        const double margin = 1e-6;
        if (std::abs(local.y - kPaperIntr.d_min) < margin ||
            std::abs(local.y - kPaperIntr.d_max) < margin)
            continue;
        if (len > 0.0 &&
            std::abs(local.y - len * std::cos(kPaperIntr.half_angle)) < margin)
            continue;
        if (std::abs(dot(p.position() - camera.position(), p.normal())) < margin) continue;

        CHECK(is_visible(moved_cam, kPaperIntr, moved_p) == is_visible(camera, kPaperIntr, p));
    }
}

TEST_CASE("positional FOV membership is convex along chords") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 500) {
        const CameraConfig camera = random_camera(rng);
        const Vec2 a = camera_to_world(
            {uniform_in(rng, -40.0, 40.0), uniform_in(rng, 20.0, 90.0)}, camera);
        const Vec2 b = camera_to_world(
            {uniform_in(rng, -40.0, 40.0), uniform_in(rng, 20.0, 90.0)}, camera);
        if (!in_fov(camera, kPaperIntr, a) || !in_fov(camera, kPaperIntr, b)) continue;
        ++checked;
        for (int step = 1; step < 10; ++step) {
            const double f = step / 10.0;
            const Vec2 mid = a + f * (b - a);
            CHECK(in_fov(camera, kPaperIntr, mid));
        }
    }
}

TEST_CASE("intrinsics validation rejects malformed trapezoids") {
    CHECK_THROWS_AS(validate(CameraIntrinsics{0.0, 80.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(validate(CameraIntrinsics{30.0, 30.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(validate(CameraIntrinsics{30.0, 80.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(validate(CameraIntrinsics{30.0, 80.0, kPi / 2}), std::domain_error);
    CHECK_NOTHROW(validate(kPaperIntr));
}

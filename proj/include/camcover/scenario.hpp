#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "camcover/camera.hpp"
#include "camcover/contour.hpp"
#include "camcover/coverage.hpp"
#include "camcover/optimizer.hpp"

namespace camcover {

/// Recipe for a seeded random closed contour: a circle of base_radius with
/// harmonic radial ripple, deforming radially over the sampled interval by
/// at most `deformation` millimeters at any point.
struct ContourGeneratorSpec {
    std::uint64_t seed = 1;
    int point_count = 180;
    int sample_count = 12;
    double t_start = 0.0;
    double t_end = 11.0;
    double base_radius = 40.0;
    double roughness = 0.1;   // relative radial ripple of the base shape
    double deformation = 4.0; // max positional displacement, mm

    friend bool operator==(const ContourGeneratorSpec&, const ContourGeneratorSpec&) = default;
};

/// Deterministic in the seed. Normals are the analytic outward normals of
/// the deformed curve at each instant. Throws std::domain_error when the
/// ripple or deformation would push the radius to zero.
DeformableContour generate_random_contour(const ContourGeneratorSpec& spec);

/// One experiment: the deforming contour, the camera model, how many
/// cameras to place and where they may go, and the search parameters.
struct Scenario {
    std::string name;
    CameraIntrinsics intrinsics;
    int camera_count = 1;
    SearchSpace space;  // camera_count is mirrored into the space
    PackParams params;
    std::optional<ContourGeneratorSpec> generator;  // set when the contour is generated
    DeformableContour contour;                      // always materialized

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

void validate(const Scenario& scenario);

/// JSON scenario I/O. Angle fields carry a _rad or _deg suffix; files may
/// use either, saving always writes radians so a save/load round trip
/// reproduces the value exactly. Load errors name the offending field.
Scenario parse_scenario(const std::string& text, const std::string& origin);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& scenario);
void save_scenario(const std::string& path, const Scenario& scenario);

/// JSON deployment I/O with the same unit conventions.
Deployment parse_deployment(const std::string& text, const std::string& origin);
Deployment load_deployment(const std::string& path);
std::string serialize_deployment(const Deployment& deployment);
void save_deployment(const std::string& path, const Deployment& deployment);

}  // namespace camcover

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "camcover/camera.hpp"
#include "camcover/features.hpp"

namespace camcover {

/// A candidate placement of the whole camera network. All cameras share
/// one set of intrinsics.
struct Deployment {
    std::vector<CameraConfig> cameras;
    CameraIntrinsics intrinsics;

    int camera_count() const { return static_cast<int>(cameras.size()); }

    friend bool operator==(const Deployment&, const Deployment&) = default;
};

void validate(const Deployment& deployment);

/// Tallies of how much geometric work an evaluation performed. One
/// visibility test = one point checked against one camera.
struct EvalCounter {
    long long visibility_tests = 0;
    long long point_evaluations = 0;
};

/// 1 if at least one camera sees the point, else 0. Every camera is tested
/// so instrumented counts do not depend on camera order.
int point_covered(const Deployment& deployment, const Pose& point, EvalCounter* counter = nullptr);

/// Network cost: number of feature points seen by at least one camera.
/// Serial reference evaluation straight off the visibility predicate.
int cost(const Deployment& deployment, std::span<const FeaturePoint> features,
         EvalCounter* counter = nullptr);

struct CoverageRate {
    int covered = 0;
    int total = 0;
    double fraction() const { return total > 0 ? static_cast<double>(covered) / total : 0.0; }
};

/// Fraction of contour points whose sample at `sample_index` (1-based) is
/// covered by the network.
CoverageRate coverage_rate(const Deployment& deployment, const DeformableContour& contour,
                           int sample_index, EvalCounter* counter = nullptr);

struct TrajectoryCoverage {
    std::vector<std::uint8_t> fully_covered;  // one flag per contour point
    int covered_count = 0;
    int total = 0;
    double fraction() const { return total > 0 ? static_cast<double>(covered_count) / total : 0.0; }
};

/// Exhaustive check over every trajectory sample: a point counts as covered
/// only if all of its samples are covered. This is the evaluation the
/// feature-point reduction avoids; it doubles as an oracle in tests.
/// OpenMP-parallel over contour points; identical to the serial variant.
TrajectoryCoverage brute_force_trajectory_coverage(const Deployment& deployment,
                                                   const DeformableContour& contour,
                                                   EvalCounter* counter = nullptr);
TrajectoryCoverage brute_force_trajectory_coverage_serial(const Deployment& deployment,
                                                          const DeformableContour& contour,
                                                          EvalCounter* counter = nullptr);

/// Genome layout (x, y, theta) per camera -> Deployment.
Deployment decode_deployment(std::span<const double> genome, const CameraIntrinsics& intrinsics);

/// Repeated-cost evaluator used inside the optimizer loop. Feature normals
/// are precomputed once and per-call camera trigonometry is hoisted, so the
/// inner test is free of transcendentals. evaluate() runs the OpenMP kernel;
/// evaluate_serial() is the reference kept for testing and benchmarking.
/// Both return exactly the same integer as cost().
class CostEvaluator {
public:
    CostEvaluator(const CameraIntrinsics& intrinsics, std::vector<FeaturePoint> features);

    int evaluate(std::span<const CameraConfig> cameras, EvalCounter* counter = nullptr) const;
    int evaluate_serial(std::span<const CameraConfig> cameras, EvalCounter* counter = nullptr) const;

    int feature_count() const { return static_cast<int>(features_.size()); }
    const std::vector<FeaturePoint>& features() const { return features_; }
    const CameraIntrinsics& intrinsics() const { return intrinsics_; }

private:
    int run(std::span<const CameraConfig> cameras, EvalCounter* counter, bool parallel) const;

    CameraIntrinsics intrinsics_;
    std::vector<FeaturePoint> features_;
    std::vector<Vec2> positions_;
    std::vector<Vec2> normals_;
};

}  // namespace camcover

#include "camcover/coverage.hpp"

#include <algorithm>
#include <stdexcept>

namespace camcover {

namespace {
// Below this many feature points the parallel region costs more than the loop.
constexpr std::int64_t kParallelCutoff = 128;
}  // namespace

void validate(const Deployment& deployment) {
    if (deployment.cameras.empty())
        throw std::domain_error("deployment: needs at least one camera");
    validate(deployment.intrinsics);
}

int point_covered(const Deployment& deployment, const Pose& point, EvalCounter* counter) {
    int covered = 0;
    for (const auto& camera : deployment.cameras)
        covered = std::max(covered, is_visible(camera, deployment.intrinsics, point) ? 1 : 0);
    if (counter) {
        counter->visibility_tests += deployment.camera_count();
        counter->point_evaluations += 1;
    }
    return covered;
}

int cost(const Deployment& deployment, std::span<const FeaturePoint> features,
         EvalCounter* counter) {
    if (features.empty()) throw std::domain_error("cost: empty feature list");
    int total = 0;
    for (const auto& feature : features) total += point_covered(deployment, feature.pose, counter);
    return total;
}

CoverageRate coverage_rate(const Deployment& deployment, const DeformableContour& contour,
                           int sample_index, EvalCounter* counter) {
    if (sample_index < 1 || sample_index > contour.sample_count())
        throw std::domain_error("coverage_rate: sample index out of range");
    CoverageRate rate;
    rate.total = contour.point_count();
    for (const auto& trajectory : contour.trajectories)
        rate.covered += point_covered(
            deployment, trajectory.samples[static_cast<std::size_t>(sample_index - 1)], counter);
    return rate;
}

namespace {

TrajectoryCoverage brute_force_impl(const Deployment& deployment, const DeformableContour& contour,
                                    EvalCounter* counter, bool parallel) {
    const std::int64_t k_count = contour.point_count();
    TrajectoryCoverage result;
    result.total = static_cast<int>(k_count);
    result.fully_covered.assign(static_cast<std::size_t>(k_count), 0);

    int covered_count = 0;
    long long tests = 0;
    long long point_evals = 0;
#pragma omp parallel for schedule(static) reduction(+ : covered_count, tests, point_evals) \
    if (parallel && k_count >= 2)
    for (std::int64_t k = 0; k < k_count; ++k) {
        const auto& trajectory = contour.trajectories[static_cast<std::size_t>(k)];
        int all = 1;
        for (const auto& sample : trajectory.samples) {
            int covered = 0;
            for (const auto& camera : deployment.cameras)
                covered = std::max(covered,
                                   is_visible(camera, deployment.intrinsics, sample) ? 1 : 0);
            tests += deployment.camera_count();
            point_evals += 1;
            all &= covered;
        }
        result.fully_covered[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(all);
        covered_count += all;
    }
    result.covered_count = covered_count;
    if (counter) {
        counter->visibility_tests += tests;
        counter->point_evaluations += point_evals;
    }
    return result;
}

}  // namespace

TrajectoryCoverage brute_force_trajectory_coverage(const Deployment& deployment,
                                                   const DeformableContour& contour,
                                                   EvalCounter* counter) {
    return brute_force_impl(deployment, contour, counter, true);
}

TrajectoryCoverage brute_force_trajectory_coverage_serial(const Deployment& deployment,
                                                          const DeformableContour& contour,
                                                          EvalCounter* counter) {
    return brute_force_impl(deployment, contour, counter, false);
}

Deployment decode_deployment(std::span<const double> genome, const CameraIntrinsics& intrinsics) {
    if (genome.size() % 3 != 0 || genome.empty())
        throw std::domain_error("decode_deployment: genome length must be a positive multiple of 3");
    Deployment deployment;
    deployment.intrinsics = intrinsics;
    deployment.cameras.reserve(genome.size() / 3);
    for (std::size_t i = 0; i < genome.size(); i += 3)
        deployment.cameras.emplace_back(genome[i], genome[i + 1], genome[i + 2]);
    return deployment;
}

CostEvaluator::CostEvaluator(const CameraIntrinsics& intrinsics, std::vector<FeaturePoint> features)
    : intrinsics_(intrinsics), features_(std::move(features)) {
    if (features_.empty()) throw std::domain_error("CostEvaluator: empty feature list");
    validate(intrinsics_);
    positions_.reserve(features_.size());
    normals_.reserve(features_.size());
    for (const auto& feature : features_) {
        positions_.push_back(feature.pose.position());
        normals_.push_back(feature.pose.normal());
    }
}

int CostEvaluator::run(std::span<const CameraConfig> cameras, EvalCounter* counter,
                       bool parallel) const {
    struct CameraTrig {
        double x, y, sin_t, cos_t;
    };
    std::vector<CameraTrig> trig;
    trig.reserve(cameras.size());
    for (const auto& camera : cameras)
        trig.push_back({camera.x, camera.y, std::sin(camera.theta), std::cos(camera.theta)});

    const double d_min = intrinsics_.d_min;
    const double d_max = intrinsics_.d_max;
    // half_angle < pi/2, but the epsilon could tip the cosine negative and
    // flip the sign-free squared comparison below; clamp to keep it valid.
    const double cos_cone = std::max(0.0, std::cos(intrinsics_.half_angle + kDefaultAngleEps));
    const double cos_cone_sq = cos_cone * cos_cone;
    const std::int64_t n = static_cast<std::int64_t>(features_.size());

    int total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) \
    if (parallel && n >= kParallelCutoff)
    for (std::int64_t j = 0; j < n; ++j) {
        const Vec2 p = positions_[static_cast<std::size_t>(j)];
        const Vec2 normal = normals_[static_cast<std::size_t>(j)];
        int seen = 0;
        for (const auto& cam : trig) {
            const double rx = p.x - cam.x;
            const double ry = p.y - cam.y;
            // Camera-frame depth doubles as the projection onto the axis.
            const double depth = cam.cos_t * ry - cam.sin_t * rx;
            if (depth < d_min || depth > d_max) continue;
            const double len_sq = rx * rx + ry * ry;
            if (depth * depth < cos_cone_sq * len_sq) continue;
            if (rx * normal.x + ry * normal.y >= 0.0) continue;
            seen = 1;
        }
        total += seen;
    }
    if (counter) {
        counter->visibility_tests += n * static_cast<long long>(cameras.size());
        counter->point_evaluations += n;
    }
    return total;
}

int CostEvaluator::evaluate(std::span<const CameraConfig> cameras, EvalCounter* counter) const {
    return run(cameras, counter, true);
}

int CostEvaluator::evaluate_serial(std::span<const CameraConfig> cameras,
                                   EvalCounter* counter) const {
    return run(cameras, counter, false);
}

}  // namespace camcover

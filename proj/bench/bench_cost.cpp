// Timing harness for the cost kernels: the OpenMP feature-point evaluator,
// its serial reference, the span-based cost(), and the brute-force
// whole-trajectory sweep the reduction replaces.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "camcover/coverage.hpp"
#include "camcover/features.hpp"
#include "camcover/rng.hpp"
#include "camcover/scenario.hpp"

using namespace camcover;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<Deployment> random_deployments(int count, int cameras,
                                           const CameraIntrinsics& intrinsics) {
    std::mt19937_64 rng(4242);
    std::vector<Deployment> deployments;
    deployments.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Deployment dep;
        dep.intrinsics = intrinsics;
        for (int n = 0; n < cameras; ++n)
            dep.cameras.emplace_back(uniform_in(rng, -150.0, 150.0),
                                     uniform_in(rng, -150.0, 150.0), uniform_in(rng, 0.0, kTwoPi));
        deployments.push_back(std::move(dep));
    }
    return deployments;
}

template <typename Fn>
void report(const char* name, int reps, long long tests_per_rep, Fn&& body) {
    long long checksum = 0;
    const auto start = Clock::now();
    for (int r = 0; r < reps; ++r) checksum += body(r);
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%-24s %7d evals  %9.2f ms total  %8.2f us/eval  %6.1f Mtests/s  checksum %lld\n",
                name, reps, 1e3 * total, 1e6 * total / reps,
                static_cast<double>(tests_per_rep) * reps / total / 1e6, checksum);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 2000;
    if (reps < 1) {
        std::fprintf(stderr, "usage: bench_cost [repetitions >= 1]\n");
        return 1;
    }

    ContourGeneratorSpec spec;  // 180 points, 12 instants
    spec.seed = 42;
    const DeformableContour contour = generate_random_contour(spec);
    const auto features = select_feature_points(contour);
    const CameraIntrinsics intrinsics{30.0, 80.0, deg_to_rad(26.0)};
    const CostEvaluator evaluator(intrinsics, features);

    const int cameras = 6;
    const auto deployments = random_deployments(64, cameras, intrinsics);
    const long long reduced_tests = static_cast<long long>(features.size()) * cameras;
    const long long brute_tests =
        static_cast<long long>(contour.point_count()) * contour.sample_count() * cameras;

    std::printf("contour: %d points x %d instants, %zu feature points, %d cameras\n",
                contour.point_count(), contour.sample_count(), features.size(), cameras);
    std::printf("omp threads: %d\n\n", omp_get_max_threads());

    auto pick = [&](int r) -> const Deployment& {
        return deployments[static_cast<std::size_t>(r) % deployments.size()];
    };

    report("evaluator (openmp)", reps, reduced_tests,
           [&](int r) { return evaluator.evaluate(pick(r).cameras); });
    report("evaluator (serial)", reps, reduced_tests,
           [&](int r) { return evaluator.evaluate_serial(pick(r).cameras); });
    report("cost (reference)", reps, reduced_tests,
           [&](int r) { return cost(pick(r), features); });
    const int brute_reps = std::max(1, reps / 10);
    report("brute force (openmp)", brute_reps, brute_tests, [&](int r) {
        return brute_force_trajectory_coverage(pick(r), contour).covered_count;
    });
    report("brute force (serial)", brute_reps, brute_tests, [&](int r) {
        return brute_force_trajectory_coverage_serial(pick(r), contour).covered_count;
    });

    // The OpenMP kernels must agree with their serial references exactly.
    int mismatches = 0;
    for (const Deployment& dep : deployments) {
        if (evaluator.evaluate(dep.cameras) != evaluator.evaluate_serial(dep.cameras)) ++mismatches;
        const auto par = brute_force_trajectory_coverage(dep, contour);
        const auto ser = brute_force_trajectory_coverage_serial(dep, contour);
        if (par.fully_covered != ser.fully_covered) ++mismatches;
    }
    std::printf("\nparallel/serial mismatches: %d\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}

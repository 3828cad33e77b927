#include "camcover/solve.hpp"

#include <vector>

#include "camcover/features.hpp"

namespace camcover {

SolveResult solve_scenario(const Scenario& scenario, const SolveOptions& options) {
    validate(scenario);

    CostEvaluator evaluator(scenario.intrinsics, select_feature_points(scenario.contour));
    const int camera_count = scenario.camera_count;

    Problem problem;
    problem.space = scenario.space;
    problem.max_fitness = evaluator.feature_count();
    problem.fitness = [&evaluator, camera_count](const std::vector<double>& genome) {
        std::vector<CameraConfig> cameras;
        cameras.reserve(static_cast<std::size_t>(camera_count));
        for (int i = 0; i < camera_count; ++i)
            cameras.emplace_back(genome[static_cast<std::size_t>(3 * i)],
                                 genome[static_cast<std::size_t>(3 * i + 1)],
                                 genome[static_cast<std::size_t>(3 * i + 2)]);
        return static_cast<double>(evaluator.evaluate(cameras));
    };

    PackParams params = scenario.params;
    if (options.seed) params.seed = *options.seed;
    if (options.max_iterations) params.max_iterations = *options.max_iterations;

    SolveResult result;
    result.run = run_pack(problem, params, options.algorithm);
    result.deployment = decode_deployment(result.run.best_genome, scenario.intrinsics);
    result.feature_count = evaluator.feature_count();
    return result;
}

}  // namespace camcover

#pragma once

#include <cstdint>
#include <optional>

#include "camcover/coverage.hpp"
#include "camcover/optimizer.hpp"
#include "camcover/scenario.hpp"

namespace camcover {

struct SolveOptions {
    Algorithm algorithm = Algorithm::iwpa;
    std::optional<std::uint64_t> seed;       // overrides scenario params
    std::optional<int> max_iterations;       // overrides scenario params
};

struct SolveResult {
    Deployment deployment;
    RunResult run;
    int feature_count = 0;  // also the fitness ceiling used for early stopping
};

/// Reduces the scenario contour to feature points, wires the cost into the
/// pack search, and runs the chosen algorithm. Deterministic in
/// (scenario, options).
SolveResult solve_scenario(const Scenario& scenario, const SolveOptions& options);

}  // namespace camcover

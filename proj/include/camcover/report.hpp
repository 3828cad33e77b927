#pragma once

#include <span>
#include <string>
#include <vector>

#include "camcover/coverage.hpp"
#include "camcover/scenario.hpp"
#include "camcover/solve.hpp"

namespace camcover {

/// Per-iteration best fitness. Row 0 is the initial pack.
std::string convergence_csv(std::span<const double> history);

/// The 4K feature points, one row per point: j,k,vertex,x_mm,y_mm,rho_rad.
std::string features_csv(std::span<const FeaturePoint> features);

/// Coverage of every sampled instant plus the exhaustive whole-trajectory
/// aggregate. Numerators and denominators are exact integers; the rate is
/// formatted as a percentage with two decimals.
std::string rates_table(const Deployment& deployment, const DeformableContour& contour);

/// Human-readable wrap-up of one solve run.
std::string solve_summary(const Scenario& scenario, const SolveOptions& options,
                          const SolveResult& result);

/// Iteration at which a history first reaches 90% of its final value.
int iterations_to_90(std::span<const double> history);

struct ComparePair {
    std::uint64_t seed = 0;
    double iwpa_final = 0.0;
    double wpa_final = 0.0;
    int iwpa_to_90 = 0;
    int wpa_to_90 = 0;
    std::vector<double> iwpa_history;  // kept for monotonicity checks, not serialized
    std::vector<double> wpa_history;
};

struct CompareReport {
    std::vector<ComparePair> pairs;
    double iwpa_mean = 0.0;
    double wpa_mean = 0.0;
    double iwpa_median = 0.0;
    double wpa_median = 0.0;
    int faster_pairs = 0;  // pairs where IWPA reaches 90% of final sooner
};

/// Paired runs of both algorithms over [seed_first, seed_last].
CompareReport compare_algorithms(const Scenario& scenario, std::uint64_t seed_first,
                                 std::uint64_t seed_last);

std::string compare_csv(const CompareReport& report);
std::string compare_summary(const CompareReport& report);

}  // namespace camcover

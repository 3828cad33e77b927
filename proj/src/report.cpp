#include "camcover/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace camcover {

namespace {

/// Integral values print as integers, everything else with enough digits
/// to round-trip. Output is locale-independent.
std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string format_fixed(double v, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, v);
    return buffer;
}

double mean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::string convergence_csv(std::span<const double> history) {
    std::ostringstream out;
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < history.size(); ++i)
        out << i << ',' << format_number(history[i]) << '\n';
    return out.str();
}

std::string features_csv(std::span<const FeaturePoint> features) {
    std::ostringstream out;
    out << "j,k,vertex,x_mm,y_mm,rho_rad\n";
    for (std::size_t j = 0; j < features.size(); ++j) {
        const FeaturePoint& f = features[j];
        out << (j + 1) << ',' << f.source_index << ',' << f.vertex_index << ','
            << format_number(f.pose.x) << ',' << format_number(f.pose.y) << ','
            << format_number(f.pose.rho) << '\n';
    }
    return out.str();
}

std::string rates_table(const Deployment& deployment, const DeformableContour& contour) {
    validate(contour);
    const int m_count = contour.sample_count();
    const Trajectory& first = contour.trajectories.front();
    std::ostringstream out;
    out << "instant,time_s,covered,total,rate_percent\n";
    for (int m = 1; m <= m_count; ++m) {
        const double t =
            first.t0 + (first.ts - first.t0) * static_cast<double>(m - 1) / (m_count - 1);
        const CoverageRate rate = coverage_rate(deployment, contour, m);
        out << m << ',' << format_fixed(t, 2) << ',' << rate.covered << ',' << rate.total << ','
            << format_fixed(100.0 * rate.fraction(), 2) << '\n';
    }
    const TrajectoryCoverage full = brute_force_trajectory_coverage(deployment, contour);
    out << "full-trajectory aggregate: " << full.covered_count << '/' << full.total << " = "
        << format_fixed(100.0 * full.fraction(), 2) << "%\n";
    return out.str();
}

int iterations_to_90(std::span<const double> history) {
    if (history.empty()) return 0;
    const double target = 0.9 * history.back();
    for (std::size_t i = 0; i < history.size(); ++i)
        if (history[i] >= target) return static_cast<int>(i);
    return static_cast<int>(history.size()) - 1;
}

std::string solve_summary(const Scenario& scenario, const SolveOptions& options,
                          const SolveResult& result) {
    std::ostringstream out;
    out << "scenario: " << scenario.name << '\n';
    out << "algorithm: " << (options.algorithm == Algorithm::iwpa ? "iwpa" : "wpa") << '\n';
    out << "seed: " << (options.seed ? *options.seed : scenario.params.seed) << '\n';
    out << "cameras: " << scenario.camera_count << '\n';
    out << "feature points: " << result.feature_count << '\n';
    const int budget =
        options.max_iterations ? *options.max_iterations : scenario.params.max_iterations;
    out << "iterations run: " << result.run.iterations << " (budget " << budget << ")\n";
    out << "best fitness: " << format_number(result.run.best_fitness) << " / "
        << result.feature_count << '\n';

    double min_rate = 1.0, max_rate = 0.0;
    int min_instant = 1;
    for (int m = 1; m <= scenario.contour.sample_count(); ++m) {
        const double rate = coverage_rate(result.deployment, scenario.contour, m).fraction();
        if (rate < min_rate) {
            min_rate = rate;
            min_instant = m;
        }
        max_rate = std::max(max_rate, rate);
    }
    out << "per-instant coverage: min " << format_fixed(100.0 * min_rate, 2) << "% (instant "
        << min_instant << "), max " << format_fixed(100.0 * max_rate, 2) << "%\n";
    return out.str();
}

CompareReport compare_algorithms(const Scenario& scenario, std::uint64_t seed_first,
                                 std::uint64_t seed_last) {
    if (seed_first > seed_last) throw std::runtime_error("compare: empty seed range");
    CompareReport report;
    std::vector<double> iwpa_finals, wpa_finals;
    for (std::uint64_t seed = seed_first; seed <= seed_last; ++seed) {
        SolveOptions iwpa{Algorithm::iwpa, seed, std::nullopt};
        SolveOptions wpa{Algorithm::wpa, seed, std::nullopt};
        const SolveResult a = solve_scenario(scenario, iwpa);
        const SolveResult b = solve_scenario(scenario, wpa);
        ComparePair pair;
        pair.seed = seed;
        pair.iwpa_final = a.run.best_fitness;
        pair.wpa_final = b.run.best_fitness;
        pair.iwpa_to_90 = iterations_to_90(a.run.history);
        pair.wpa_to_90 = iterations_to_90(b.run.history);
        pair.iwpa_history = a.run.history;
        pair.wpa_history = b.run.history;
        if (pair.iwpa_to_90 < pair.wpa_to_90) ++report.faster_pairs;
        iwpa_finals.push_back(pair.iwpa_final);
        wpa_finals.push_back(pair.wpa_final);
        report.pairs.push_back(pair);
    }
    report.iwpa_mean = mean(iwpa_finals);
    report.wpa_mean = mean(wpa_finals);
    report.iwpa_median = median(iwpa_finals);
    report.wpa_median = median(wpa_finals);
    return report;
}

std::string compare_csv(const CompareReport& report) {
    std::ostringstream out;
    out << "seed,iwpa_final,wpa_final,iwpa_iters_to_90,wpa_iters_to_90\n";
    for (const ComparePair& pair : report.pairs)
        out << pair.seed << ',' << format_number(pair.iwpa_final) << ','
            << format_number(pair.wpa_final) << ',' << pair.iwpa_to_90 << ',' << pair.wpa_to_90
            << '\n';
    return out.str();
}

std::string compare_summary(const CompareReport& report) {
    std::ostringstream out;
    const std::size_t n = report.pairs.size();
    out << "pairs: " << n;
    if (n > 0)
        out << " (seeds " << report.pairs.front().seed << ".." << report.pairs.back().seed << ")";
    out << '\n';
    out << "mean final fitness: iwpa " << format_fixed(report.iwpa_mean, 4) << ", wpa "
        << format_fixed(report.wpa_mean, 4) << '\n';
    out << "median final fitness: iwpa " << format_fixed(report.iwpa_median, 4) << ", wpa "
        << format_fixed(report.wpa_median, 4) << '\n';
    out << "iwpa reaches 90% of its final fitness sooner in " << report.faster_pairs << '/' << n
        << " pairs\n";
    return out.str();
}

}  // namespace camcover

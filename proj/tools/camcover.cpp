#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "camcover/features.hpp"
#include "camcover/render.hpp"
#include "camcover/report.hpp"
#include "camcover/scenario.hpp"
#include "camcover/solve.hpp"

namespace {

namespace fs = std::filesystem;
using namespace camcover;

fs::path default_out_dir() {
    if (const char* env = std::getenv("CAMCOVER_OUT")) return fs::path(env);
    return fs::path(".");
}

void write_text(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

/// "A..B" or a single "A" -> [A, B].
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const std::uint64_t seed = std::stoull(text);
            return {seed, seed};
        }
        const std::uint64_t first = std::stoull(text.substr(0, sep));
        const std::uint64_t last = std::stoull(text.substr(sep + 2));
        if (first > last) throw std::runtime_error("");
        return {first, last};
    } catch (const std::exception&) {
        throw std::runtime_error("--seeds expects A..B with A <= B, got '" + text + "'");
    }
}

int run_solve(const std::string& scenario_path, const std::string& algo,
              std::optional<std::uint64_t> seed, std::optional<int> iterations,
              const fs::path& out_dir) {
    const Scenario scenario = load_scenario(scenario_path);
    SolveOptions options;
    options.algorithm = algo == "wpa" ? Algorithm::wpa : Algorithm::iwpa;
    options.seed = seed;
    options.max_iterations = iterations;
    const SolveResult result = solve_scenario(scenario, options);

    fs::create_directories(out_dir);
    write_text(out_dir / "deployment.json", serialize_deployment(result.deployment));
    write_text(out_dir / "convergence.csv", convergence_csv(result.run.history));
    const std::string summary = solve_summary(scenario, options, result);
    write_text(out_dir / "summary.txt", summary);
    std::cout << summary;
    std::cout << "outputs: " << (out_dir / "deployment.json").string() << ", "
              << (out_dir / "convergence.csv").string() << ", "
              << (out_dir / "summary.txt").string() << '\n';
    return 0;
}

int run_evaluate(const std::string& scenario_path, const std::string& deployment_path) {
    const Scenario scenario = load_scenario(scenario_path);
    const Deployment deployment = load_deployment(deployment_path);
    std::cout << rates_table(deployment, scenario.contour);
    return 0;
}

int run_features(const std::string& scenario_path, const std::string& out_file) {
    const Scenario scenario = load_scenario(scenario_path);
    const std::string csv = features_csv(select_feature_points(scenario.contour));
    if (out_file.empty())
        std::cout << csv;
    else
        write_text(out_file, csv);
    return 0;
}

int run_compare(const std::string& scenario_path, const std::string& seeds,
                const fs::path& out_dir) {
    const Scenario scenario = load_scenario(scenario_path);
    const auto [first, last] = parse_seed_range(seeds);
    const CompareReport report = compare_algorithms(scenario, first, last);

    fs::create_directories(out_dir);
    write_text(out_dir / "compare.csv", compare_csv(report));
    const std::string summary = compare_summary(report);
    write_text(out_dir / "compare_summary.txt", summary);
    std::cout << summary;
    return 0;
}

int run_render(const std::string& scenario_path, const std::string& deployment_path,
               int sample_index, std::string out_file, const fs::path& out_dir) {
    const Scenario scenario = load_scenario(scenario_path);
    Deployment deployment;
    deployment.intrinsics = scenario.intrinsics;
    if (!deployment_path.empty()) deployment = load_deployment(deployment_path);
    const int m = sample_index > 0 ? sample_index : scenario.contour.sample_count();
    const std::string svg = render_svg(scenario.contour, deployment, m);
    if (out_file.empty()) out_file = (out_dir / "render.svg").string();
    write_text(out_file, svg);
    std::cout << "wrote " << out_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal trapezoid-FOV camera placement over a deforming contour"};
    app.require_subcommand(1);

    std::string scenario_path, deployment_path, algo = "iwpa", seeds = "1..10", out_file;
    std::optional<std::uint64_t> seed;
    std::optional<int> iterations;
    int sample_index = 0;
    std::string out_dir = default_out_dir().string();

    auto* solve = app.add_subcommand("solve", "optimize a camera deployment");
    solve->add_option("scenario", scenario_path, "scenario JSON file")->required();
    solve->add_option("--algo", algo, "iwpa (default) or the wpa baseline")
        ->check(CLI::IsMember({"iwpa", "wpa"}));
    solve->add_option("--seed", seed, "override the scenario seed");
    solve->add_option("--iters", iterations, "override the iteration budget");
    solve->add_option("--out", out_dir, "output directory");

    auto* evaluate = app.add_subcommand("evaluate", "coverage rates of a saved deployment");
    evaluate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    evaluate->add_option("deployment", deployment_path, "deployment JSON file")->required();

    auto* features = app.add_subcommand("features", "emit the feature points as CSV");
    features->add_option("scenario", scenario_path, "scenario JSON file")->required();
    features->add_option("--out", out_file, "write to a file instead of stdout");

    auto* compare = app.add_subcommand("compare", "paired runs of both algorithms");
    compare->add_option("scenario", scenario_path, "scenario JSON file")->required();
    compare->add_option("--seeds", seeds, "seed range A..B (default 1..10)");
    compare->add_option("--out", out_dir, "output directory");

    auto* render = app.add_subcommand("render", "draw contour, FOVs and coverage as SVG");
    render->add_option("scenario", scenario_path, "scenario JSON file")->required();
    render->add_option("deployment", deployment_path, "deployment JSON file");
    render->add_option("--t", sample_index, "1-based instant index (default: last)");
    render->add_option("--out", out_file, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(scenario_path, algo, seed, iterations, out_dir);
        if (evaluate->parsed()) return run_evaluate(scenario_path, deployment_path);
        if (features->parsed()) return run_features(scenario_path, out_file);
        if (compare->parsed()) return run_compare(scenario_path, seeds, out_dir);
        if (render->parsed())
            return run_render(scenario_path, deployment_path, sample_index, out_file, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "camcover/coverage.hpp"
#include "camcover/optimizer.hpp"
#include "camcover/rng.hpp"
#include "doctest.h"

using namespace camcover;

namespace {

SearchSpace box(double half, int cameras) {
    SearchSpace space;
    space.x_min = -half;
    space.x_max = half;
    space.y_min = -half;
    space.y_max = half;
    space.camera_count = cameras;
    return space;
}

// Distance-to-target fitness: smooth, unimodal, independent of theta.
Problem bowl_problem(double half = 20.0) {
    Problem problem;
    problem.space = box(half, 1);
    problem.fitness = [](const std::vector<double>& g) {
        const double dx = g[0] - 10.0;
        const double dy = g[1] + 5.0;
        return -(dx * dx + dy * dy);
    };
    return problem;
}

PackState two_wolf_state(std::vector<double> head, double head_fitness,
                         std::vector<double> other, double other_fitness) {
    PackState state;
    state.wolves.push_back(Wolf{std::move(head), head_fitness});
    state.wolves.push_back(Wolf{std::move(other), other_fitness});
    state.roles = {WolfRole::head, WolfRole::detective};
    state.head_index = 0;
    state.rng.seed(7);
    return state;
}

}  // namespace

TEST_CASE("role counts follow the ratios with round-off guards") {
    PackParams params;
    CHECK(detective_count(params) == 10);   // ceil(0.4 * 25)
    CHECK(elimination_count(params) == 7);  // floor(0.3 * 25)

    params.pack_size = 10;
    CHECK(detective_count(params) == 4);
    CHECK(elimination_count(params) == 3);
}

TEST_CASE("parameter validation rejects broken settings") {
    const SearchSpace space = box(50.0, 2);
    PackParams good;
    CHECK_NOTHROW(validate(good, space));

    auto expect_throw = [&](auto&& tweak) {
        PackParams p;
        tweak(p);
        CHECK_THROWS_AS(validate(p, space), std::domain_error);
    };
    expect_throw([](PackParams& p) { p.pack_size = 1; });
    expect_throw([](PackParams& p) { p.detective_ratio = 0.0; });
    expect_throw([](PackParams& p) { p.elimination_ratio = 1.0; });
    expect_throw([](PackParams& p) { p.detective_ratio = 0.999; });  // no fierce slot left
    expect_throw([](PackParams& p) { p.wander_times = 0; });
    expect_throw([](PackParams& p) { p.wander_step_pos = 0.0; });
    expect_throw([](PackParams& p) { p.rush_step_ori = -1.0; });
    expect_throw([](PackParams& p) { p.besiege_radius = 0.0; });
    expect_throw([](PackParams& p) { p.besiege_gain_min = p.besiege_gain_max; });
    expect_throw([](PackParams& p) { p.max_iterations = -1; });

    SearchSpace bad = space;
    bad.x_min = bad.x_max;
    CHECK_THROWS_AS(validate(PackParams{}, bad), std::domain_error);
    bad = space;
    bad.camera_count = 0;
    CHECK_THROWS_AS(validate(PackParams{}, bad), std::domain_error);
}

TEST_CASE("wander_step evaluates the structured sweep") {
    PackParams params;
    params.wander_times = 6;
    params.wander_gain_levels = 5;
    params.wander_dir_offset = 0.0;
    params.wander_gain_offset = 1.0;

    // gain = 1 - 0/5 + 1 = 2, phase = 2*pi/6, delta = 2 * 3 * sin(60 deg).
    CHECK(wander_step(0.0, 0, 1, 3.0, params) ==
          doctest::Approx(5.196152422706632).epsilon(1e-15));

    // At gain level G_a with zero offset the gain vanishes.
    params.wander_gain_offset = 0.0;
    CHECK(wander_step(1.25, params.wander_gain_levels, 3, 3.0, params) ==
          doctest::Approx(1.25).epsilon(1e-15));

    // A full-turn phase leaves the component unchanged up to sin(2*pi).
    params.wander_gain_offset = 1.0;
    CHECK(std::abs(wander_step(4.0, 0, params.wander_times, 3.0, params) - 4.0) < 1e-12);
}

TEST_CASE("rush_step walks a fixed-length step toward the head") {
    const SearchSpace space = box(100.0, 1);
    PackParams params;
    params.rush_step_pos = 2.0;
    params.rush_step_ori = deg_to_rad(2.0);

    std::vector<double> genome{0.0, 0.0, deg_to_rad(10.0)};
    const std::vector<double> head{3.0, 4.0, deg_to_rad(350.0)};
    rush_step(genome, head, space, params);
    CHECK(genome[0] == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(genome[1] == doctest::Approx(1.6).epsilon(1e-12));
    // Shortest arc from 10 deg to 350 deg is -20 deg, clamped to -2 deg.
    CHECK(genome[2] == doctest::Approx(deg_to_rad(8.0)).epsilon(1e-12));

    // Closer than one step: snaps exactly onto the head position.
    std::vector<double> close{2.5, 4.0, 0.0};
    rush_step(close, head, space, params);
    CHECK(close[0] == 3.0);
    CHECK(close[1] == 4.0);

    // The position step respects the box.
    const SearchSpace tight = box(1.0, 1);
    std::vector<double> edge{0.5, 0.0, 0.0};
    rush_step(edge, std::vector<double>{90.0, 0.0, 0.0}, tight, params);
    CHECK(edge[0] == 1.0);
}

TEST_CASE("besiege_step contracts toward the prey by a random gain") {
    CHECK(besiege_step(2.0, 4.0, 1.0, 0.5) == doctest::Approx(3.0));
    CHECK(besiege_step(2.0, 4.0, -1.0, 0.5) == doctest::Approx(1.0));
    CHECK(besiege_step(7.0, 7.0, 0.83, 0.5) == 7.0);  // zero gap, any gain
}

TEST_CASE("pack_distance is the worst per-camera position gap") {
    const std::vector<double> a{0.0, 0.0, 1.0, 3.0, 4.0, 2.0};
    const std::vector<double> b{0.0, 0.0, 4.0, 0.0, 0.0, 5.0};
    CHECK(pack_distance(a, b) == doctest::Approx(5.0));
    CHECK(pack_distance(a, a) == 0.0);
}

TEST_CASE("init_pack samples, sorts and assigns roles") {
    Problem problem;
    problem.space = box(50.0, 2);
    problem.fitness = [](const std::vector<double>& g) { return g[0]; };
    PackParams params;
    params.seed = 11;

    const PackState state = init_pack(problem, params);
    REQUIRE(static_cast<int>(state.wolves.size()) == params.pack_size);
    REQUIRE(state.roles.size() == state.wolves.size());
    CHECK(state.head_index == 0);
    CHECK(state.roles[0] == WolfRole::head);
    CHECK(std::count(state.roles.begin(), state.roles.end(), WolfRole::detective) == 10);
    CHECK(std::count(state.roles.begin(), state.roles.end(), WolfRole::fierce) == 14);
    for (int i = 1; i <= 10; ++i) CHECK(state.roles[static_cast<std::size_t>(i)] == WolfRole::detective);

    for (const Wolf& wolf : state.wolves) {
        REQUIRE(static_cast<int>(wolf.genome.size()) == problem.space.genome_length());
        for (std::size_t d = 0; d < wolf.genome.size(); ++d) {
            if (d % 3 == 2) {
                CHECK(wolf.genome[d] >= 0.0);
                CHECK(wolf.genome[d] < kTwoPi);
            } else {
                CHECK(wolf.genome[d] >= -50.0);
                CHECK(wolf.genome[d] <= 50.0);
            }
        }
        CHECK(wolf.fitness == wolf.genome[0]);
    }
    for (std::size_t i = 1; i < state.wolves.size(); ++i)
        CHECK(state.wolves[i - 1].fitness >= state.wolves[i].fitness);

    REQUIRE(state.history.size() == 1);
    CHECK(state.history[0] == state.wolves[0].fitness);

    const PackState again = init_pack(problem, params);
    for (std::size_t i = 0; i < state.wolves.size(); ++i) {
        CHECK(again.wolves[i].genome == state.wolves[i].genome);
        CHECK(again.wolves[i].fitness == state.wolves[i].fitness);
    }
}

TEST_CASE("wander_wolf keeps the wolf in place when nothing improves") {
    Problem problem;
    problem.space = box(60.0, 1);
    problem.fitness = [](const std::vector<double>&) { return 0.0; };
    PackParams params;

    PackState state = two_wolf_state({50.0, 50.0, 0.0}, 0.0, {0.0, 0.0, 0.0}, 0.0);
    const std::vector<double> before = state.wolves[1].genome;
    wander_wolf(state, 1, problem, params, Algorithm::iwpa);
    CHECK(state.wolves[1].genome == before);
    CHECK(state.wolves[1].fitness == 0.0);
}

TEST_CASE("wander_wolf picks the first strict improvement of the sweep and promotes") {
    // One feature just inside the near-base dead zone of a camera at the
    // origin: only candidates that back the camera up far enough see it.
    const CameraIntrinsics intr{30.0, 80.0, deg_to_rad(26.0)};
    FeaturePoint feature;
    feature.pose = Pose(0.0, 29.0, 3 * kPi / 2);
    feature.source_index = 1;
    feature.vertex_index = 1;
    const CostEvaluator evaluator(intr, {feature});

    Problem problem;
    problem.space = box(60.0, 1);
    problem.fitness = [&](const std::vector<double>& g) {
        return static_cast<double>(evaluator.evaluate_serial(decode_deployment(g, intr).cameras));
    };
    PackParams params;

    PackState state = two_wolf_state({50.0, 50.0, 0.0}, 0.0, {0.0, 0.0, 0.0}, 0.0);

    // Replay the documented sweep by hand: gain levels outer, direction
    // trials inner, first strict improvement wins.
    std::vector<double> expected;
    double expected_fitness = 0.0;
    for (int g = 0; g < params.wander_gain_levels; ++g) {
        for (int s = 1; s <= params.wander_times; ++s) {
            const double gain =
                1.0 - static_cast<double>(g) / params.wander_gain_levels + params.wander_gain_offset;
            const double dir =
                kTwoPi * static_cast<double>(s) / params.wander_times + params.wander_dir_offset;
            std::vector<double> candidate{
                clamp_to(0.0 + gain * params.wander_step_pos * std::cos(dir), -60.0, 60.0),
                clamp_to(0.0 + gain * params.wander_step_pos * std::sin(dir), -60.0, 60.0),
                normalize_angle(0.0 + gain * params.wander_step_ori * std::sin(dir))};
            const double fitness = problem.fitness(candidate);
            if (fitness > expected_fitness) {
                expected_fitness = fitness;
                expected = candidate;
            }
        }
    }
    REQUIRE(expected_fitness == 1.0);  // the sweep can actually reach the feature

    wander_wolf(state, 1, problem, params, Algorithm::iwpa);

    // Fitness 1 beats the head's 0, so the improved genome was swapped into
    // the head slot and the old head now sits in the detective slot.
    CHECK(state.head_index == 0);
    CHECK(state.wolves[0].fitness == 1.0);
    CHECK(state.wolves[0].genome == expected);
    CHECK(state.wolves[1].genome == std::vector<double>{50.0, 50.0, 0.0});
    CHECK(state.roles == std::vector<WolfRole>{WolfRole::head, WolfRole::detective});
}

TEST_CASE("rush_wolf approaches the head and stops inside the besiege radius") {
    Problem problem;
    problem.space = box(100.0, 1);
    problem.fitness = [](const std::vector<double>&) { return 0.0; };
    PackParams params;  // rush step 2 mm, radius 3 mm, 8 steps

    PackState state = two_wolf_state({0.0, 0.0, 0.0}, 0.0, {13.0, 0.0, 0.0}, 0.0);
    state.roles[1] = WolfRole::fierce;
    rush_wolf(state, 1, problem, params);
    // 13 -> 11 -> 9 -> 7 -> 5 -> 3, then the 3 mm radius check stops it.
    CHECK(state.wolves[1].genome == std::vector<double>{3.0, 0.0, 0.0});
    CHECK(state.wolves[0].genome == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("rush_wolf breaks off as soon as it overtakes the head") {
    Problem problem;
    problem.space = box(100.0, 1);
    problem.fitness = [](const std::vector<double>& g) { return g[0] < 12.0 ? 1.0 : 0.0; };
    PackParams params;

    PackState state = two_wolf_state({0.0, 0.0, 0.0}, 0.0, {13.0, 0.0, 0.0}, 0.0);
    state.roles[1] = WolfRole::fierce;
    rush_wolf(state, 1, problem, params);
    // First step lands on x = 11 with fitness 1 > 0: promoted, no more steps.
    CHECK(state.wolves[0].genome == std::vector<double>{11.0, 0.0, 0.0});
    CHECK(state.wolves[0].fitness == 1.0);
    CHECK(state.wolves[1].genome == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("besiege_wolf keeps the starting genome when nothing improves") {
    Problem problem;
    problem.space = box(100.0, 1);
    problem.fitness = [](const std::vector<double>&) { return 0.0; };
    PackParams params;

    PackState state = two_wolf_state({0.0, 0.0, 0.0}, 0.0, {2.0, 4.0, 1.0}, 0.0);
    state.roles[1] = WolfRole::fierce;
    besiege_wolf(state, 1, problem, params);
    CHECK(state.wolves[1].genome == std::vector<double>{2.0, 4.0, 1.0});
    CHECK(state.wolves[1].fitness == 0.0);
}

TEST_CASE("besiege_wolf never worsens and respects the box") {
    Problem problem = bowl_problem(100.0);
    PackParams params;

    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> start{uniform_in(rng, -100.0, 100.0), uniform_in(rng, -100.0, 100.0),
                                  uniform_in(rng, 0.0, kTwoPi)};
        const double start_fitness = problem.fitness(start);
        PackState state = two_wolf_state({10.0, -5.0, 0.0}, 0.0, start, start_fitness);
        state.roles[1] = WolfRole::fierce;
        state.rng.seed(1000 + static_cast<std::uint64_t>(trial));

        besiege_wolf(state, 1, problem, params);
        const Wolf& wolf = state.wolves[state.head_index == 0 ? 1 : 0];
        CHECK(wolf.fitness >= start_fitness);
        if (wolf.fitness == start_fitness) CHECK(wolf.genome == start);
        CHECK(wolf.genome[0] >= -100.0);
        CHECK(wolf.genome[0] <= 100.0);
        CHECK(wolf.genome[1] >= -100.0);
        CHECK(wolf.genome[1] <= 100.0);
        CHECK(wolf.genome[2] >= 0.0);
        CHECK(wolf.genome[2] < kTwoPi);
    }
}

TEST_CASE("renew_pack replaces the tail and keeps the survivors") {
    Problem problem;
    problem.space = box(50.0, 1);
    problem.fitness = [](const std::vector<double>& g) { return g[0]; };
    PackParams params;
    params.seed = 23;

    PackState state = init_pack(problem, params);
    std::vector<double> survivors;
    for (int i = 0; i < params.pack_size - 7; ++i)
        survivors.push_back(state.wolves[static_cast<std::size_t>(i)].fitness);

    renew_pack(state, problem, params);
    REQUIRE(static_cast<int>(state.wolves.size()) == params.pack_size);
    for (std::size_t i = 1; i < state.wolves.size(); ++i)
        CHECK(state.wolves[i - 1].fitness >= state.wolves[i].fitness);
    CHECK(state.roles[0] == WolfRole::head);
    CHECK(std::count(state.roles.begin(), state.roles.end(), WolfRole::detective) == 10);

    // Every pre-renewal survivor fitness is still present.
    std::multiset<double> pool;
    for (const Wolf& wolf : state.wolves) pool.insert(wolf.fitness);
    for (double f : survivors) {
        auto it = pool.find(f);
        REQUIRE(it != pool.end());
        pool.erase(it);
    }
    CHECK(state.wolves[0].fitness >= survivors[0]);
}

TEST_CASE("a zero-iteration run returns the best initial wolf") {
    Problem problem = bowl_problem();
    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 0;
    params.seed = 3;

    const RunResult result = run_iwpa(problem, params);
    CHECK(result.iterations == 0);
    REQUIRE(result.history.size() == 1);
    CHECK(result.best_fitness == result.history[0]);

    const PackState state = init_pack(problem, params);
    CHECK(result.best_genome == state.wolves[0].genome);
    CHECK(result.best_fitness == state.wolves[0].fitness);
}

TEST_CASE("the run stops early once max_fitness is reached") {
    Problem problem;
    problem.space = box(50.0, 1);
    problem.fitness = [](const std::vector<double>&) { return 5.0; };
    problem.max_fitness = 5.0;
    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 50;

    const RunResult result = run_iwpa(problem, params);
    CHECK(result.iterations == 0);
    CHECK(result.best_fitness == 5.0);
}

TEST_CASE("fixed seeds reproduce runs bit for bit") {
    Problem problem = bowl_problem();
    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 15;
    params.seed = 5;

    for (Algorithm algorithm : {Algorithm::iwpa, Algorithm::wpa}) {
        const RunResult a = run_pack(problem, params, algorithm);
        const RunResult b = run_pack(problem, params, algorithm);
        CHECK(a.best_genome == b.best_genome);
        CHECK(a.best_fitness == b.best_fitness);
        CHECK(a.history == b.history);

        PackParams other = params;
        other.seed = 6;
        const RunResult c = run_pack(problem, other, algorithm);
        CHECK(a.best_genome != c.best_genome);
    }
}

TEST_CASE("the best-so-far history never decreases") {
    Problem problem = bowl_problem();
    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 25;

    for (Algorithm algorithm : {Algorithm::iwpa, Algorithm::wpa}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            params.seed = seed;
            const RunResult result = run_pack(problem, params, algorithm);
            CHECK(result.iterations == static_cast<int>(result.history.size()) - 1);
            CHECK(result.iterations <= params.max_iterations);
            for (std::size_t i = 1; i < result.history.size(); ++i)
                CHECK(result.history[i] >= result.history[i - 1]);
            CHECK(result.best_fitness == result.history.back());
        }
    }
}

TEST_CASE("scaling the fitness by a constant does not change the search path") {
    Problem base = bowl_problem();
    Problem scaled = base;
    const FitnessFn inner = base.fitness;
    // Power-of-two scale keeps every comparison exact in floating point.
    scaled.fitness = [inner](const std::vector<double>& g) { return 4.0 * inner(g); };

    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 20;
    params.seed = 9;

    for (Algorithm algorithm : {Algorithm::iwpa, Algorithm::wpa}) {
        const RunResult a = run_pack(base, params, algorithm);
        const RunResult b = run_pack(scaled, params, algorithm);
        CHECK(a.best_genome == b.best_genome);
        REQUIRE(a.history.size() == b.history.size());
        for (std::size_t i = 0; i < a.history.size(); ++i)
            CHECK(b.history[i] == 4.0 * a.history[i]);
    }
}

TEST_CASE("the improved pack closes in on a smooth optimum") {
    Problem problem = bowl_problem();
    PackParams params;
    params.pack_size = 10;
    params.max_iterations = 60;

    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        params.seed = seed;
        const RunResult result = run_iwpa(problem, params);
        const double dx = result.best_genome[0] - 10.0;
        const double dy = result.best_genome[1] + 5.0;
        CHECK(std::sqrt(dx * dx + dy * dy) < 2.0);
        CHECK(result.best_fitness > result.history[0]);
    }
}

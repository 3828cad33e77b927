#include "camcover/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "camcover/rng.hpp"

namespace camcover {

void validate(const SearchSpace& space) {
    if (!(space.x_min < space.x_max) || !(space.y_min < space.y_max))
        throw std::domain_error("search space: position ranges must be nonempty");
    if (space.camera_count < 1)
        throw std::domain_error("search space: camera count must be >= 1");
}

int detective_count(const PackParams& params) {
    return static_cast<int>(std::ceil(params.detective_ratio * params.pack_size - 1e-9));
}

int elimination_count(const PackParams& params) {
    return static_cast<int>(std::floor(params.elimination_ratio * params.pack_size + 1e-9));
}

void validate(const PackParams& params, const SearchSpace& space) {
    validate(space);
    if (params.pack_size < 2) throw std::domain_error("pack: size must be >= 2");
    if (!(params.detective_ratio > 0.0 && params.detective_ratio < 1.0) ||
        !(params.elimination_ratio > 0.0 && params.elimination_ratio < 1.0))
        throw std::domain_error("pack: proportions must lie in (0, 1)");
    if (params.wander_times < 1 || params.wander_gain_levels < 1 || params.rush_times < 1 ||
        params.besiege_times < 1)
        throw std::domain_error("pack: operation counts must be >= 1");
    if (!(params.wander_step_pos > 0.0) || !(params.wander_step_ori > 0.0) ||
        !(params.rush_step_pos > 0.0) || !(params.rush_step_ori > 0.0) ||
        !(params.besiege_step_pos > 0.0) || !(params.besiege_step_ori > 0.0) ||
        !(params.besiege_radius > 0.0))
        throw std::domain_error("pack: step sizes must be positive");
    if (detective_count(params) < 1 || detective_count(params) > params.pack_size - 1)
        throw std::domain_error("pack: detective share leaves no valid role split");
    if (elimination_count(params) < 1 || elimination_count(params) > params.pack_size - 1)
        throw std::domain_error("pack: elimination share leaves no survivors");
    if (params.max_iterations < 0) throw std::domain_error("pack: iteration budget must be >= 0");
    if (!(params.besiege_gain_min < params.besiege_gain_max))
        throw std::domain_error("pack: besiege gain range must be nonempty");
}

double wander_step(double x, int gain_index, int trial_index, double step,
                   const PackParams& params) {
    const double gain =
        1.0 - static_cast<double>(gain_index) / params.wander_gain_levels + params.wander_gain_offset;
    const double phase =
        kTwoPi * static_cast<double>(trial_index) / params.wander_times + params.wander_dir_offset;
    return x + gain * step * std::sin(phase);
}

void rush_step(std::span<double> genome, std::span<const double> head_genome,
               const SearchSpace& space, const PackParams& params) {
    for (std::size_t block = 0; block + 2 < genome.size(); block += 3) {
        const Vec2 pos{genome[block], genome[block + 1]};
        const Vec2 target{head_genome[block], head_genome[block + 1]};
        const Vec2 gap = target - pos;
        const double len = norm(gap);
        if (len > 0.0) {
            if (len <= params.rush_step_pos) {
                genome[block] = target.x;
                genome[block + 1] = target.y;
            } else {
                genome[block] = clamp_to(pos.x + params.rush_step_pos * gap.x / len,
                                         space.x_min, space.x_max);
                genome[block + 1] = clamp_to(pos.y + params.rush_step_pos * gap.y / len,
                                             space.y_min, space.y_max);
            }
        }
        const double arc = shortest_arc(genome[block + 2], head_genome[block + 2]);
        const double turn = clamp_to(arc, -params.rush_step_ori, params.rush_step_ori);
        genome[block + 2] = normalize_angle(genome[block + 2] + turn);
    }
}

double besiege_step(double x, double prey, double lambda, double step) {
    return x + lambda * step * std::abs(prey - x);
}

double pack_distance(std::span<const double> genome_a, std::span<const double> genome_b) {
    double worst = 0.0;
    for (std::size_t block = 0; block + 2 < genome_a.size(); block += 3) {
        const Vec2 a{genome_a[block], genome_a[block + 1]};
        const Vec2 b{genome_b[block], genome_b[block + 1]};
        worst = std::max(worst, distance(a, b));
    }
    return worst;
}

namespace {

std::vector<double> sample_genome(std::mt19937_64& rng, const SearchSpace& space) {
    std::vector<double> genome;
    genome.reserve(static_cast<std::size_t>(space.genome_length()));
    for (int i = 0; i < space.camera_count; ++i) {
        genome.push_back(uniform_in(rng, space.x_min, space.x_max));
        genome.push_back(uniform_in(rng, space.y_min, space.y_max));
        genome.push_back(uniform_in(rng, 0.0, kTwoPi));
    }
    return genome;
}

// Stable descending sort keeps earlier slots ahead on ties, so the head is
// the lowest-index best wolf and eliminations hit the highest-index worst.
void sort_pack(std::vector<Wolf>& wolves) {
    std::stable_sort(wolves.begin(), wolves.end(),
                     [](const Wolf& a, const Wolf& b) { return a.fitness > b.fitness; });
}

void assign_roles(PackState& state, const PackParams& params) {
    const int detectives = detective_count(params);
    state.roles.assign(state.wolves.size(), WolfRole::fierce);
    state.roles[0] = WolfRole::head;
    for (int i = 1; i <= detectives && i < static_cast<int>(state.wolves.size()); ++i)
        state.roles[static_cast<std::size_t>(i)] = WolfRole::detective;
    state.head_index = 0;
}

// Swaps the challenger into the head slot when it is strictly better; the
// deposed head adopts the challenger's role.
void maybe_promote(PackState& state, int index) {
    if (index != state.head_index &&
        state.wolves[static_cast<std::size_t>(index)].fitness >
            state.wolves[static_cast<std::size_t>(state.head_index)].fitness)
        std::swap(state.wolves[static_cast<std::size_t>(index)],
                  state.wolves[static_cast<std::size_t>(state.head_index)]);
}

}  // namespace

PackState init_pack(const Problem& problem, const PackParams& params) {
    validate(params, problem.space);
    PackState state;
    state.rng.seed(params.seed);
    state.wolves.reserve(static_cast<std::size_t>(params.pack_size));
    for (int q = 0; q < params.pack_size; ++q) {
        Wolf wolf;
        wolf.genome = sample_genome(state.rng, problem.space);
        wolf.fitness = problem.fitness(wolf.genome);
        state.wolves.push_back(std::move(wolf));
    }
    sort_pack(state.wolves);
    assign_roles(state, params);
    state.history.push_back(state.wolves[0].fitness);
    return state;
}

void wander_wolf(PackState& state, int index, const Problem& problem, const PackParams& params,
                 Algorithm algorithm) {
    Wolf& wolf = state.wolves[static_cast<std::size_t>(index)];
    const SearchSpace& space = problem.space;
    std::vector<double> candidate;
    std::vector<double> best_genome;
    double best_fitness = wolf.fitness;
    bool improved = false;

    for (std::size_t block = 0; block + 2 < wolf.genome.size(); block += 3) {
        for (int g = 0; g < params.wander_gain_levels; ++g) {
            for (int s = 1; s <= params.wander_times; ++s) {
                double gain, direction;
                if (algorithm == Algorithm::iwpa) {
                    gain = 1.0 - static_cast<double>(g) / params.wander_gain_levels +
                           params.wander_gain_offset;
                    direction = kTwoPi * static_cast<double>(s) / params.wander_times +
                                params.wander_dir_offset;
                } else {
                    gain = 1.0;
                    direction = uniform_in(state.rng, 0.0, kTwoPi);
                }
                candidate = wolf.genome;
                candidate[block] = clamp_to(
                    candidate[block] + gain * params.wander_step_pos * std::cos(direction),
                    space.x_min, space.x_max);
                candidate[block + 1] = clamp_to(
                    candidate[block + 1] + gain * params.wander_step_pos * std::sin(direction),
                    space.y_min, space.y_max);
                candidate[block + 2] = normalize_angle(
                    candidate[block + 2] + gain * params.wander_step_ori * std::sin(direction));
                const double fitness = problem.fitness(candidate);
                if (fitness > best_fitness) {
                    best_fitness = fitness;
                    best_genome = candidate;
                    improved = true;
                }
            }
        }
    }
    if (improved) {
        wolf.genome = std::move(best_genome);
        wolf.fitness = best_fitness;
        maybe_promote(state, index);
    }
}

void rush_wolf(PackState& state, int index, const Problem& problem, const PackParams& params) {
    for (int step = 0; step < params.rush_times; ++step) {
        Wolf& wolf = state.wolves[static_cast<std::size_t>(index)];
        const Wolf& head = state.wolves[static_cast<std::size_t>(state.head_index)];
        if (pack_distance(wolf.genome, head.genome) <= params.besiege_radius) break;
        rush_step(wolf.genome, head.genome, problem.space, params);
        wolf.fitness = problem.fitness(wolf.genome);
        if (wolf.fitness > head.fitness) {
            maybe_promote(state, index);
            break;
        }
    }
}

void besiege_wolf(PackState& state, int index, const Problem& problem, const PackParams& params) {
    Wolf& wolf = state.wolves[static_cast<std::size_t>(index)];
    const std::vector<double> prey = state.wolves[static_cast<std::size_t>(state.head_index)].genome;
    const SearchSpace& space = problem.space;

    std::vector<double> current = wolf.genome;
    std::vector<double> best_genome = wolf.genome;
    double best_fitness = wolf.fitness;

    for (int step = 0; step < params.besiege_times; ++step) {
        for (std::size_t d = 0; d < current.size(); ++d) {
            const double lambda =
                uniform_in(state.rng, params.besiege_gain_min, params.besiege_gain_max);
            const bool orientation = (d % 3 == 2);
            const double step_size = orientation ? params.besiege_step_ori : params.besiege_step_pos;
            double next = besiege_step(current[d], prey[d], lambda, step_size);
            if (orientation)
                next = normalize_angle(next);
            else if (d % 3 == 0)
                next = clamp_to(next, space.x_min, space.x_max);
            else
                next = clamp_to(next, space.y_min, space.y_max);
            current[d] = next;
        }
        const double fitness = problem.fitness(current);
        if (fitness > best_fitness) {
            best_fitness = fitness;
            best_genome = current;
        }
    }
    wolf.genome = std::move(best_genome);
    wolf.fitness = best_fitness;
    maybe_promote(state, index);
}

void renew_pack(PackState& state, const Problem& problem, const PackParams& params) {
    sort_pack(state.wolves);
    const int replaced = elimination_count(params);
    state.wolves.resize(state.wolves.size() - static_cast<std::size_t>(replaced));
    for (int r = 0; r < replaced; ++r) {
        Wolf wolf;
        wolf.genome = sample_genome(state.rng, problem.space);
        wolf.fitness = problem.fitness(wolf.genome);
        state.wolves.push_back(std::move(wolf));
    }
    sort_pack(state.wolves);
    assign_roles(state, params);
}

RunResult run_pack(const Problem& problem, const PackParams& params, Algorithm algorithm) {
    PackState state = init_pack(problem, params);
    for (int t = 1; t <= params.max_iterations; ++t) {
        if (state.wolves[static_cast<std::size_t>(state.head_index)].fitness >=
            problem.max_fitness)
            break;
        state.iteration = t;
        for (int i = 0; i < static_cast<int>(state.wolves.size()); ++i)
            if (state.roles[static_cast<std::size_t>(i)] == WolfRole::detective)
                wander_wolf(state, i, problem, params, algorithm);
        for (int i = 0; i < static_cast<int>(state.wolves.size()); ++i)
            if (state.roles[static_cast<std::size_t>(i)] == WolfRole::fierce)
                rush_wolf(state, i, problem, params);
        for (int i = 0; i < static_cast<int>(state.wolves.size()); ++i)
            if (i != state.head_index) besiege_wolf(state, i, problem, params);
        renew_pack(state, problem, params);
        state.history.push_back(state.wolves[0].fitness);
    }
    RunResult result;
    result.best_genome = state.wolves[static_cast<std::size_t>(state.head_index)].genome;
    result.best_fitness = state.wolves[static_cast<std::size_t>(state.head_index)].fitness;
    result.history = std::move(state.history);
    result.iterations = static_cast<int>(result.history.size()) - 1;
    return result;
}

RunResult run_iwpa(const Problem& problem, const PackParams& params) {
    return run_pack(problem, params, Algorithm::iwpa);
}

RunResult run_wpa(const Problem& problem, const PackParams& params) {
    return run_pack(problem, params, Algorithm::wpa);
}

}  // namespace camcover

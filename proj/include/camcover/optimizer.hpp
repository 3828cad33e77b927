#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "camcover/geometry.hpp"

namespace camcover {

/// Box of feasible camera positions. Orientations always range over the
/// full circle and wrap instead of clamping.
struct SearchSpace {
    double x_min = -100.0;
    double x_max = 100.0;
    double y_min = -100.0;
    double y_max = 100.0;
    int camera_count = 1;

    int genome_length() const { return 3 * camera_count; }

    friend bool operator==(const SearchSpace&, const SearchSpace&) = default;
};

void validate(const SearchSpace& space);

/// One candidate deployment: genome laid out as (x, y, theta) per camera.
struct Wolf {
    std::vector<double> genome;
    double fitness = 0.0;
};

enum class WolfRole { head, detective, fierce };

/// Algorithm parameters. Defaults are the simulation settings; angles are
/// radians and lengths millimeters throughout.
struct PackParams {
    int pack_size = 25;                            // Q
    double detective_ratio = 0.4;                  // share of the pack that wanders
    double elimination_ratio = 0.3;                // share replaced every iteration
    int wander_times = 6;                          // direction samples per gain level
    double wander_dir_offset = deg_to_rad(2.0);    // phase offset of the direction sweep
    double wander_step_pos = 3.0;                  // position wander step, mm
    double wander_step_ori = deg_to_rad(3.0);      // orientation wander step
    int wander_gain_levels = 5;                    // number of shrinking gain levels
    double wander_gain_offset = 1.0;               // additive gain offset
    int rush_times = 8;                            // max rush steps per iteration
    double rush_step_pos = 2.0;                    // position rush step, mm
    double rush_step_ori = deg_to_rad(2.0);        // orientation rush step
    double besiege_radius = 3.0;                   // rush/besiege switch distance, mm
    int besiege_times = 5;                         // besiege steps per iteration
    double besiege_step_pos = 0.5;                 // position besiege step, mm
    double besiege_step_ori = deg_to_rad(1.0);     // orientation besiege step
    double besiege_gain_min = -1.0;                // uniform gain range per component
    double besiege_gain_max = 1.0;
    int max_iterations = 100;                      // T
    std::uint64_t seed = 1;

    friend bool operator==(const PackParams&, const PackParams&) = default;
};

void validate(const PackParams& params, const SearchSpace& space);

int detective_count(const PackParams& params);
int elimination_count(const PackParams& params);

using FitnessFn = std::function<double(const std::vector<double>&)>;

/// Optimization problem handed to the pack: feasible box, fitness, and the
/// value at which the search may stop early (infinity disables the stop).
struct Problem {
    SearchSpace space;
    FitnessFn fitness;
    double max_fitness = std::numeric_limits<double>::infinity();
};

/// Pack population. Sorting and role assignment happen at initialization
/// and after every renewal; in between, the best wolf is kept at the head
/// slot by swapping on improvement.
struct PackState {
    std::vector<Wolf> wolves;     // sorted by descending fitness at phase boundaries
    std::vector<WolfRole> roles;  // role per slot
    int head_index = 0;
    int iteration = 0;
    std::mt19937_64 rng;
    std::vector<double> history;  // best fitness per iteration, entry 0 = initial pack
};

enum class Algorithm { iwpa, wpa };

/// Scalar wandering update on one genome component: gain level g, direction
/// trial s, with the structured sweep sin(2*pi*s/wander_times + offset).
double wander_step(double x, int gain_index, int trial_index, double step,
                   const PackParams& params);

/// One rushing move of a whole genome toward the head: per camera a
/// fixed-length position step along the connecting line (snapping when
/// closer than the step) and a shortest-arc orientation step.
void rush_step(std::span<double> genome, std::span<const double> head_genome,
               const SearchSpace& space, const PackParams& params);

/// Scalar besieging update: x + lambda * step * |prey - x|.
double besiege_step(double x, double prey, double lambda, double step);

/// Largest per-camera position distance between two genomes; orientations
/// are ignored (the switch radius is a length).
double pack_distance(std::span<const double> genome_a, std::span<const double> genome_b);

PackState init_pack(const Problem& problem, const PackParams& params);

/// Local sweep around one detective wolf. The Algorithm selects the sweep:
/// the improved variant scans gain levels and evenly spaced directions, the
/// baseline uses unit gain and random directions with the same trial budget.
void wander_wolf(PackState& state, int index, const Problem& problem, const PackParams& params,
                 Algorithm algorithm);

/// Moves one fierce wolf toward the head until within the besiege radius,
/// the step budget runs out, or the wolf takes over the head slot.
void rush_wolf(PackState& state, int index, const Problem& problem, const PackParams& params);

/// Random small-step contraction of one wolf around the head genome,
/// keeping the best genome visited (the starting point included).
void besiege_wolf(PackState& state, int index, const Problem& problem, const PackParams& params);

/// Drops the lowest-fitness wolves, refills with fresh uniform samples,
/// re-sorts and reassigns roles.
void renew_pack(PackState& state, const Problem& problem, const PackParams& params);

struct RunResult {
    std::vector<double> best_genome;
    double best_fitness = 0.0;
    std::vector<double> history;
    int iterations = 0;
};

RunResult run_iwpa(const Problem& problem, const PackParams& params);
RunResult run_wpa(const Problem& problem, const PackParams& params);
RunResult run_pack(const Problem& problem, const PackParams& params, Algorithm algorithm);

}  // namespace camcover

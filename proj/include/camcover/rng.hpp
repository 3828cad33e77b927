#pragma once

#include <cstdint>
#include <random>

namespace camcover {

/// Uniform draw in [0, 1) from the top 53 bits of the generator output.
/// Used instead of std::uniform_real_distribution so that the stream of
/// values is pinned by this code alone, not by the standard library build.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace camcover

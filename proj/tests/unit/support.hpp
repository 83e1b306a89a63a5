#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace kgwell::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double rel_diff(double x, double ref) {
    return std::abs(x - ref) / std::max(std::abs(ref), 1e-300);
}

} // namespace kgwell::test

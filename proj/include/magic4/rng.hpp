#pragma once

// Deterministic sampling helpers.  mt19937_64 is fully specified by the
// standard and the distributions below are hand-rolled, so a (seed, count)
// pair reproduces the identical stream on any platform.  Parallel consumers
// must derive one engine per block with block_seed.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace magic4 {

inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (block + 1));
}

inline double uniform01(std::mt19937_64& g) {
  return double(g() >> 11) * 0x1.0p-53;  // [0,1)
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// Box-Muller; returns one deviate, caching none to keep the stream simple.
inline double normal(std::mt19937_64& g) {
  double u1 = uniform01(g), u2 = uniform01(g);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

inline std::array<double, 4> sample_s3(std::mt19937_64& g) {
  for (;;) {
    std::array<double, 4> v{normal(g), normal(g), normal(g), normal(g)};
    double n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
    if (n2 < 1e-12) continue;
    double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    return v;
  }
}

}  // namespace magic4

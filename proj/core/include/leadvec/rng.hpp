// rng.hpp — seeded sampling helpers shared by state generation, optimizer
// restarts and the brute-force search. The raw-engine-to-double mappings are
// pinned here so a fixed seed yields the same stream on every platform.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "leadvec/types.hpp"

namespace leadvec {

/// splitmix64 step; derives independent substream seeds (one per restart,
/// one per worker) from a single user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Uniform double in (0, 1), never exactly 0 or 1.
inline double uniform_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// One sample with independent standard normal real and imaginary parts
/// (Box-Muller).
inline Complex gaussian_complex(std::mt19937_64& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(t), r * std::sin(t));
}

}  // namespace leadvec

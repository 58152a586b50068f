// types.hpp — scalar aliases and bitmask indexing shared by every module.
#pragma once

#include <bit>
#include <compare>
#include <complex>
#include <cstdint>

namespace leadvec {

using Complex = std::complex<double>;

/// Hard cap on register length; 2^24 amplitudes is the largest state the
/// library will allocate.
inline constexpr int max_register_bits = 24;

/// Names a subset of the register's bits. Bit k of `bits` set means register
/// bit k belongs to the subset; the same integer is the index of the matching
/// computational-basis amplitude (bit k of the index = value of register
/// bit k, k = 0 least significant).
struct SimplexIndex {
  std::uint64_t bits = 0;

  /// Number of participating bits minus one; the empty subset has
  /// dimension -1.
  constexpr int dimension() const {
    return std::popcount(bits) - 1;
  }

  constexpr int vertex_count() const { return std::popcount(bits); }

  constexpr bool contains(int bit) const {
    return (bits >> bit) & std::uint64_t{1};
  }

  friend constexpr bool operator==(SimplexIndex, SimplexIndex) = default;
  friend constexpr auto operator<=>(SimplexIndex, SimplexIndex) = default;
};

constexpr int simplex_dimension(SimplexIndex s) { return s.dimension(); }

}  // namespace leadvec

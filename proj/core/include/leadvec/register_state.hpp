// register_state.hpp — dense amplitude vector of an l-bit register, indexed
// by bitmask and graded by excitation count.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "leadvec/types.hpp"

namespace leadvec {

class RegisterState {
 public:
  /// Takes ownership of `amplitudes`; its length must be exactly 2^num_bits.
  RegisterState(int num_bits, std::vector<Complex> amplitudes);

  /// State with every amplitude zero (not normalizable; useful as a buffer).
  static RegisterState zero(int num_bits);
  /// Computational-basis state |index>.
  static RegisterState basis(int num_bits, std::uint64_t index);

  int num_bits() const { return num_bits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_bits_; }

  const Complex& operator[](std::uint64_t index) const { return amps_[index]; }
  Complex& operator[](std::uint64_t index) { return amps_[index]; }
  const Complex& operator[](SimplexIndex s) const { return amps_[s.bits]; }

  /// Amplitude of the empty simplex |0...0>.
  Complex empty_amplitude() const { return amps_[0]; }
  /// Amplitude of the single-excitation index 2^bit.
  Complex single_amplitude(int bit) const {
    return amps_[std::uint64_t{1} << bit];
  }

  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex> release_amplitudes() && { return std::move(amps_); }

  double squared_norm() const;
  double norm() const;

 private:
  int num_bits_;
  std::vector<Complex> amps_;
};

/// All (index, amplitude) pairs of grade n, i.e. popcount(index) == n + 1,
/// for n in [-1, l-1]. By default entries with |amp| <= zero_tol * ||h|| are
/// dropped; include_zeros keeps the full slice.
std::vector<std::pair<SimplexIndex, Complex>> skeleton(
    const RegisterState& h, int n, bool include_zeros = false,
    double zero_tol = 1e-12);

/// <a|b> = sum conj(a_i) b_i.
Complex inner_product(const RegisterState& a, const RegisterState& b);

/// Number of amplitudes with |amp| > zero_tol * reference_norm. A negative
/// reference_norm means "use ||h||".
std::size_t nonzero_count(const RegisterState& h, double zero_tol = 1e-12,
                          double reference_norm = -1.0);

/// Haar-like random unit vector: 2^l independent standard complex Gaussian
/// entries, normalized. Deterministic for a fixed seed.
RegisterState random_state(int num_bits, std::uint64_t seed);

/// (|0...0> + |1...1>) / sqrt(2).
RegisterState make_ghz(int num_bits);
/// Uniform superposition of the l single-excitation basis states.
RegisterState make_w(int num_bits);
/// Expands per-bit factor vectors into the full product state; factor k is
/// the (|0>, |1>) pair for register bit k.
RegisterState tensor_product_state(
    const std::vector<std::array<Complex, 2>>& factors);

}  // namespace leadvec

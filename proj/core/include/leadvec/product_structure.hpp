// product_structure.hpp — exchangeability conditions, the product-state test
// and the constructive single-bit factorization.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "leadvec/errors.hpp"
#include "leadvec/register_state.hpp"
#include "leadvec/types.hpp"

namespace leadvec {

/// Canonical factorization of a product state:
///   state = scale * global_phase *
///           (x)_k (cos(angles[k]) |0> + e^{i phases[k]} sin(angles[k]) |1>)
/// angles[k] lies in [0, pi/2]; phases[k] in (-pi, pi] and is reported as 0
/// wherever sin(angles[k]) is negligible. relabel_mask records which bits
/// were label-swapped to move a maximal amplitude to index 0 before the
/// parameters were read off (the swaps are already folded into the angles,
/// phases and global phase).
struct ProductFactorization {
  Complex global_phase = 1.0;
  double scale = 0.0;
  std::vector<double> angles;
  std::vector<double> phases;
  std::uint64_t relabel_mask = 0;

  int num_bits() const { return static_cast<int>(angles.size()); }

  /// The (|0>, |1>) components of factor k.
  std::array<Complex, 2> factor(int bit) const;

  /// Expands the factorization back into a full register state.
  RegisterState reconstruct() const;
};

/// h^s h^t - h^{s \ v} h^{t u v} for v in s, v not in t.
/// Vanishes for every valid triple exactly when h is a product state.
Complex exchangeability_defect(const RegisterState& h, SimplexIndex s,
                               SimplexIndex t, int bit);

/// Worst defect over the O(2^l) spanning family: after relabeling a
/// maximal-magnitude amplitude to index 0, every triple
/// (s = i, t = empty, v = lowest bit of i) with popcount(i) >= 2. The
/// returned triple is expressed in the original (unrelabeled) labels.
DefectTriple worst_reduced_defect(const RegisterState& h);

/// True iff the worst spanning-family defect is <= tol * ||h||^2.
bool is_product(const RegisterState& h, double tol = 1e-10);

/// Reads off the factorization of a product state; throws NotProductError
/// (carrying the worst defect triple) when the input fails is_product at
/// `tol`. When |h^0| <= zero_tol * ||h|| the amplitudes are relabeled by bit
/// flips first and the flips folded into the result.
ProductFactorization factorize_product(const RegisterState& h,
                                       double tol = 1e-10,
                                       double zero_tol = 1e-12);

}  // namespace leadvec

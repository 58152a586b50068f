// oracle.hpp — independent verification machinery: closed-form 2x2 Schmidt
// decomposition, brute-force frame search, literal tensor-expansion leading
// vector, and the all-triples exchangeability scan. Everything here is a
// separate code path from the module it cross-checks.
#pragma once

#include <array>
#include <cstdint>

#include "leadvec/errors.hpp"
#include "leadvec/register_state.hpp"

namespace leadvec {

struct SchmidtResult {
  std::array<double, 2> sigma{};  // singular values, sigma[0] >= sigma[1] >= 0
  std::array<std::array<Complex, 2>, 2> left_vectors{};   // bit 0 factors
  std::array<std::array<Complex, 2>, 2> right_vectors{};  // bit 1 factors
};

/// SVD of the 2x2 amplitude matrix M[a][b] = h[a + 2b] (bit 0 = row,
/// bit 1 = column), computed from the eigensystem of M†M; requires l == 2.
/// sum_i sigma_i left_i (x) right_i reconstructs the input.
SchmidtResult schmidt_svd(const RegisterState& h);

/// Lower bound on max_F |(F h)^0| from `samples` random frames followed by a
/// short local polish of the ten best candidates. Guarded to l <= 3;
/// requires samples >= 10000.
double brute_force_max_leading(const RegisterState& h, int samples,
                               std::uint64_t seed);

/// Leading vector by literal Kronecker expansion of
/// (x)_k (h^0 |0> + h^{k} |1>) followed by division by (h^0)^{l-1}.
/// Guarded to l <= 10.
RegisterState naive_leading_vector(const RegisterState& h,
                                   double zero_tol = 1e-12);

/// Worst exchangeability defect over every valid (s, t, v) triple,
/// O(4^l l); guarded to l <= 8.
DefectTriple worst_defect_full_scan(const RegisterState& h);

/// Product test backed by the full scan instead of the spanning family.
bool is_product_full_scan(const RegisterState& h, double tol = 1e-10);

}  // namespace leadvec

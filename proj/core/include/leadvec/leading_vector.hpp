// leading_vector.hpp — the product component built from the empty-simplex
// and single-excitation amplitudes, the split it induces, and the kappa
// objective it defines over local frames.
#pragma once

#include "leadvec/local_unitary.hpp"
#include "leadvec/register_state.hpp"

namespace leadvec {

struct LeadingSplit {
  RegisterState leading;
  RegisterState residual;  // input - leading
  double kappa = 0.0;      // squared norm of `leading`
};

/// lv(h) = (h^0)^{1-l} (x)_k (h^0 |0> + h^{k} |1>), evaluated per amplitude:
/// (lv h)^s = (h^0)^{1-|s|} prod_{k in s} h^{k}. Agrees with h exactly at
/// index 0 and at every single-excitation index. Throws
/// LeadingUndefinedError when |h^0| <= zero_tol * ||h||.
RegisterState leading_vector(const RegisterState& h, double zero_tol = 1e-12);

/// Splits h into leading_vector(h) plus a residual whose entries at index 0
/// and at the l single-excitation indices cancel to zero exactly, leaving at
/// most 2^l - l - 1 nonzero residual amplitudes.
LeadingSplit leading_split(const RegisterState& h, double zero_tol = 1e-12);

/// Squared norm of the leading vector of frame * h:
///   kappa = |g^0|^{2(1-l)} prod_k (|g^0|^2 + |g^{k}|^2),  g = frame * h.
double kappa(const RegisterState& h, const LocalFrame& frame,
             double zero_tol = 1e-12);

}  // namespace leadvec

// decomposer.hpp — per-bit coordinate ascent on |g^0|^2 and assembly of the
// orthogonal product-term decomposition it yields.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "leadvec/local_unitary.hpp"
#include "leadvec/register_state.hpp"

namespace leadvec {

struct OptimizerConfig {
  int max_sweeps = 1000;
  int restarts = 8;       // restart 0 starts from the identity frame,
                          // the rest from seeded random frames
  std::uint64_t seed = 0;
  double conv_eps = 1e-14;          // sweep gain threshold, relative to ||h||^2
  double stationarity_tol = 1e-10;  // single-excitation bound, relative to ||h||
  double zero_tol = 1e-12;
  double reconstruction_tol = 1e-10;
  int threads = 1;  // <= 0 means hardware concurrency; restarts run in
                    // parallel with a deterministic merge
};

struct SweepStep {
  LocalUnitary unitary;  // acts on the chosen bit
  RegisterState state;
};

/// Closed-form single-bit move: the unitary with top row
/// (conj(h^0), conj(h^{m})) / r rotates all of the pair mass onto the empty
/// amplitude, giving new |h^0|^2 = |h^0|^2 + |h^{m}|^2 and new h^{m} = 0.
/// When both amplitudes vanish the move is the identity.
SweepStep sweep_update_bit(const RegisterState& h, int bit);

struct OptimizeResult {
  LocalFrame frame;     // accumulated basis change
  RegisterState state;  // g = frame * h
  int sweeps = 0;
  int restarts_used = 0;
  bool converged = false;
  double max_single_excitation = 0.0;  // absolute max_m |g^{m}| at exit
};

/// Coordinate ascent over per-bit unitaries maximizing |g^0|^2, with seeded
/// restarts; keeps the restart with the largest |g^0|^2 (ties: lowest
/// restart index). Throws DegenerateInputError on the zero state.
OptimizeResult optimize_frame(const RegisterState& h,
                              const OptimizerConfig& cfg = {});

/// One rank-one summand: coefficient times an explicit product of unit
/// single-bit factors. source_index names the basis vector of the optimized
/// frame the term came from.
struct ProductTerm {
  Complex coefficient = 0.0;
  std::vector<std::array<Complex, 2>> factors;
  SimplexIndex source_index;

  RegisterState expand() const;
};

struct DecompositionDiagnostics {
  int sweeps = 0;
  int restarts_used = 0;
  bool converged = false;
  double leading_sq_norm = 0.0;   // |g^0|^2 at the optimum
  double residual_sq_norm = 0.0;
  double max_single_excitation = 0.0;  // absolute
  double kappa_at_optimum = 0.0;       // logged for inspection
};

struct Decomposition {
  std::vector<ProductTerm> terms;  // leading term first, then residual terms
                                   // in increasing source index order
  LocalFrame frame{1};             // the optimized basis change
  std::size_t leading_index = 0;   // position of the leading term in `terms`
  DecompositionDiagnostics diagnostics;
};

/// Full pipeline: optimize the frame, split off the leading term, emit one
/// term per residual amplitude above cfg.zero_tol * ||h||. At any converged
/// fixed point the term count is bounded by 2^l - l.
Decomposition decompose(const RegisterState& h, const OptimizerConfig& cfg = {});

/// Terms with |coefficient| > zero_tol * (norm of the decomposition).
std::size_t term_count(const Decomposition& d, double zero_tol);

/// Rebuilds the represented state from the coefficients and the optimized
/// frame in O(2^l l) time. Tests wanting a frame-independent check should
/// sum ProductTerm::expand() instead.
RegisterState reconstruct(const Decomposition& d);

}  // namespace leadvec

#include "leadvec/product_structure.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leadvec {

namespace {

constexpr std::uint64_t one = 1;

/// Index of a maximal-magnitude amplitude; ties break to the smallest index.
std::uint64_t index_of_max_magnitude(const RegisterState& h) {
  std::uint64_t best = 0;
  double best_sq = std::norm(h[0]);
  for (std::uint64_t i = 1; i < h.dim(); ++i) {
    const double sq = std::norm(h[i]);
    if (sq > best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  return best;
}

void require_nonzero(const RegisterState& h, const char* op) {
  if (h.squared_norm() == 0.0) {
    throw DegenerateInputError(std::string(op) +
                               " requires a state with positive norm");
  }
}

/// Maps a spanning-family triple (s' = i, t' = empty, v) taken in flipped
/// labels back to a valid triple of the original state. Flipping by `flip`
/// sends amplitude x to x ^ flip, and the family defect equals, verbatim,
/// the original-frame defect of (i ^ flip, flip, v) when v is unflipped, or
/// of (flip, i ^ flip, v) when v is flipped.
DefectTriple map_back(std::uint64_t i, int v, std::uint64_t flip,
                      Complex value) {
  if ((flip >> v) & one) {
    return DefectTriple{SimplexIndex{flip}, SimplexIndex{i ^ flip}, v, value};
  }
  return DefectTriple{SimplexIndex{i ^ flip}, SimplexIndex{flip}, v, value};
}

}  // namespace

Complex exchangeability_defect(const RegisterState& h, SimplexIndex s,
                               SimplexIndex t, int bit) {
  if (bit < 0 || bit >= h.num_bits()) {
    throw std::out_of_range("vertex bit " + std::to_string(bit) +
                            " out of range for l=" +
                            std::to_string(h.num_bits()));
  }
  if (s.bits >= h.dim() || t.bits >= h.dim()) {
    throw std::out_of_range("simplex index out of range for l=" +
                            std::to_string(h.num_bits()));
  }
  if (!s.contains(bit)) {
    throw std::invalid_argument("exchanged vertex must belong to s");
  }
  if (t.contains(bit)) {
    throw std::invalid_argument("exchanged vertex must not belong to t");
  }
  const std::uint64_t v = one << bit;
  return h[s.bits] * h[t.bits] - h[s.bits ^ v] * h[t.bits | v];
}

DefectTriple worst_reduced_defect(const RegisterState& h) {
  require_nonzero(h, "worst_reduced_defect");
  // Relabel so a maximal-magnitude amplitude sits at index 0; without this
  // the family misses states whose violations hide behind zero amplitudes
  // (e.g. the flipped W state).
  const std::uint64_t flip = index_of_max_magnitude(h);
  const auto amp = [&](std::uint64_t x) { return h[x ^ flip]; };

  DefectTriple worst;  // value 0, bit -1: nothing to check for l == 1
  double worst_sq = -1.0;
  const Complex a0 = amp(0);
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    if (std::popcount(i) < 2) continue;
    const int v = std::countr_zero(i);
    const Complex d =
        amp(i) * a0 - amp(i & (i - 1)) * amp(one << v);
    const double sq = std::norm(d);
    if (sq > worst_sq) {
      worst_sq = sq;
      worst = map_back(i, v, flip, d);
    }
  }
  return worst;
}

bool is_product(const RegisterState& h, double tol) {
  require_nonzero(h, "is_product");
  const DefectTriple worst = worst_reduced_defect(h);
  return std::abs(worst.value) <= tol * h.squared_norm();
}

ProductFactorization factorize_product(const RegisterState& h, double tol,
                                       double zero_tol) {
  require_nonzero(h, "factorize_product");
  const DefectTriple worst = worst_reduced_defect(h);
  const double bound = tol * h.squared_norm();
  if (std::abs(worst.value) > bound) {
    throw NotProductError(
        "state is not a product: defect " + std::to_string(std::abs(worst.value)) +
            " at (s=" + std::to_string(worst.s.bits) + ", t=" +
            std::to_string(worst.t.bits) + ", bit=" + std::to_string(worst.bit) +
            ") exceeds " + std::to_string(bound),
        worst, tol);
  }

  const int l = h.num_bits();
  const double nrm = h.norm();
  const std::uint64_t flip =
      std::abs(h[0]) <= zero_tol * nrm ? index_of_max_magnitude(h) : 0;
  const auto amp = [&](std::uint64_t x) { return h[x ^ flip]; };

  ProductFactorization out;
  out.scale = nrm;
  out.relabel_mask = flip;
  out.angles.resize(l);
  out.phases.resize(l);

  const Complex a0 = amp(0);
  Complex phase = a0 / std::abs(a0);
  for (int k = 0; k < l; ++k) {
    const Complex t_k = amp(one << k) / a0;
    const double alpha = std::atan(std::abs(t_k));
    double phi = std::abs(t_k) == 0.0 ? 0.0 : std::arg(t_k);
    if ((flip >> k) & one) {
      // A label swap on bit k turns (cos a, e^{ip} sin a) into
      // e^{ip} (sin a, e^{-ip} cos a); the leftover phase joins the global
      // one.
      phase *= std::polar(1.0, phi);
      out.angles[k] = std::numbers::pi / 2.0 - alpha;
      out.phases[k] = -phi;
    } else {
      out.angles[k] = alpha;
      out.phases[k] = phi;
    }
    if (std::sin(out.angles[k]) <= zero_tol) {
      out.phases[k] = 0.0;
    } else if (out.phases[k] <= -std::numbers::pi) {
      out.phases[k] = std::numbers::pi;  // keep phases in (-pi, pi]
    }
  }
  out.global_phase = phase / std::abs(phase);
  return out;
}

std::array<Complex, 2> ProductFactorization::factor(int bit) const {
  return {Complex(std::cos(angles[bit]), 0.0),
          std::polar(std::sin(angles[bit]), phases[bit])};
}

RegisterState ProductFactorization::reconstruct() const {
  std::vector<std::array<Complex, 2>> factors;
  factors.reserve(angles.size());
  for (int k = 0; k < num_bits(); ++k) factors.push_back(factor(k));
  RegisterState s = tensor_product_state(factors);
  const Complex c = scale * global_phase;
  for (std::uint64_t i = 0; i < s.dim(); ++i) s[i] *= c;
  return s;
}

}  // namespace leadvec

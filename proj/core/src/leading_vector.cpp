#include "leadvec/leading_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "leadvec/errors.hpp"

namespace leadvec {

namespace {

constexpr std::uint64_t one = 1;

// Below this fraction of ||h|| the ratio products are evaluated in
// log-magnitude + phase form instead of directly, so extreme |h^0| cannot
// overflow or underflow the per-simplex products.
constexpr double direct_path_floor = 1e-3;

void check_leading_defined(const RegisterState& h, double zero_tol,
                           double nrm) {
  if (nrm == 0.0 || std::abs(h[0]) <= zero_tol * nrm) {
    throw LeadingUndefinedError(
        "leading vector undefined: |h^0| = " + std::to_string(std::abs(h[0])) +
        " is below " + std::to_string(zero_tol) +
        " * ||h||; relabel or optimize the frame first");
  }
}

}  // namespace

RegisterState leading_vector(const RegisterState& h, double zero_tol) {
  const double nrm = h.norm();
  check_leading_defined(h, zero_tol, nrm);

  const int l = h.num_bits();
  const std::uint64_t dim = h.dim();
  const Complex a0 = h[0];
  std::vector<Complex> out(dim);

  // The empty and single-excitation amplitudes carry over exactly; this is
  // what makes them cancel in the residual.
  out[0] = a0;
  for (int k = 0; k < l; ++k) out[one << k] = h.single_amplitude(k);

  if (std::abs(a0) >= direct_path_floor * nrm) {
    // (lv h)^s = (lv h)^{s minus lowest bit} * (h^{v} / h^0)
    std::vector<Complex> ratio(l);
    for (int k = 0; k < l; ++k) ratio[k] = h.single_amplitude(k) / a0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (std::popcount(i) < 2) continue;
      out[i] = out[i & (i - 1)] * ratio[std::countr_zero(i)];
    }
  } else {
    // Same recursion in log space.
    std::vector<double> lr(l), pr(l);
    const double la0 = std::log(std::abs(a0));
    const double pa0 = std::arg(a0);
    for (int k = 0; k < l; ++k) {
      const Complex ak = h.single_amplitude(k);
      lr[k] = std::log(std::abs(ak)) - la0;  // -inf when ak == 0
      pr[k] = std::arg(ak) - pa0;
    }
    std::vector<double> lm(dim), ph(dim);
    lm[0] = la0;
    ph[0] = pa0;
    for (int k = 0; k < l; ++k) {
      lm[one << k] = la0 + lr[k];
      ph[one << k] = pa0 + pr[k];
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (std::popcount(i) < 2) continue;
      const std::uint64_t parent = i & (i - 1);
      const int v = std::countr_zero(i);
      lm[i] = lm[parent] + lr[v];
      ph[i] = ph[parent] + pr[v];
      out[i] = std::isinf(lm[i]) ? Complex(0, 0)
                                 : std::polar(std::exp(lm[i]), ph[i]);
    }
  }
  return RegisterState(l, std::move(out));
}

LeadingSplit leading_split(const RegisterState& h, double zero_tol) {
  RegisterState lead = leading_vector(h, zero_tol);
  std::vector<Complex> res(h.dim());
  for (std::uint64_t i = 0; i < h.dim(); ++i) res[i] = h[i] - lead[i];
  const double k = lead.squared_norm();
  return LeadingSplit{std::move(lead),
                      RegisterState(h.num_bits(), std::move(res)), k};
}

double kappa(const RegisterState& h, const LocalFrame& frame,
             double zero_tol) {
  const RegisterState g = apply_local_frame(h, frame);
  const double nrm = g.norm();
  check_leading_defined(g, zero_tol, nrm);
  const int l = g.num_bits();
  const double a0_sq = std::norm(g[0]);
  // log form of |g^0|^{2(1-l)} * prod_k (|g^0|^2 + |g^{k}|^2)
  double acc = static_cast<double>(1 - l) * std::log(a0_sq);
  for (int k = 0; k < l; ++k) {
    acc += std::log(a0_sq + std::norm(g.single_amplitude(k)));
  }
  return std::exp(acc);
}

}  // namespace leadvec

#include "leadvec/decomposer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "leadvec/errors.hpp"
#include "leadvec/leading_vector.hpp"
#include "leadvec/rng.hpp"

namespace leadvec {

namespace {

constexpr std::uint64_t one = 1;

/// Applies the closed-form bit rotation in place and returns it. The pair
/// (0, 2^bit) is mapped to (r, 0) with r = sqrt(|a|^2 + |b|^2); the zeroed
/// entry is exact because the a*b and b*a products cancel bitwise. The loop
/// runs on raw doubles; std::complex arithmetic costs a NaN branch per
/// multiply that this kernel cannot afford.
LocalUnitary rotate_bit(std::vector<Complex>& amps, int bit) {
  const std::uint64_t half = one << bit;
  const Complex a = amps[0];
  const Complex b = amps[half];
  const double rsq = std::norm(a) + std::norm(b);
  if (rsq == 0.0) return LocalUnitary::identity();
  const double inv = 1.0 / std::sqrt(rsq);
  const double ar = a.real(), ai = a.imag();
  const double br = b.real(), bi = b.imag();

  double* d = reinterpret_cast<double*>(amps.data());
  const std::uint64_t dim = amps.size();
  const std::uint64_t stride = half << 1;  // complex entries per block pair
  for (std::uint64_t base = 0; base < dim; base += stride) {
    double* p0 = d + 2 * base;
    double* p1 = p0 + stride;  // == d + 2 * (base + half)
    for (std::uint64_t off = 0; off < half; ++off) {
      const double x0r = p0[0], x0i = p0[1];
      const double x1r = p1[0], x1i = p1[1];
      // t0 = (conj(a) x0 + conj(b) x1) / r
      const double t0r = (ar * x0r + ai * x0i) + (br * x1r + bi * x1i);
      const double t0i = (ar * x0i - ai * x0r) + (br * x1i - bi * x1r);
      // t1 = (a x1 - b x0) / r
      const double t1r = (ar * x1r - ai * x1i) - (br * x0r - bi * x0i);
      const double t1i = (ar * x1i + ai * x1r) - (br * x0i + bi * x0r);
      p0[0] = t0r * inv;
      p0[1] = t0i * inv;
      p1[0] = t1r * inv;
      p1[1] = t1i * inv;
      p0 += 2;
      p1 += 2;
    }
  }
  return LocalUnitary(std::conj(a) * inv, std::conj(b) * inv, -b * inv,
                      a * inv);
}

std::uint64_t index_of_max_magnitude(const std::vector<Complex>& amps) {
  std::uint64_t best = 0;
  double best_sq = std::norm(amps[0]);
  for (std::uint64_t i = 1; i < amps.size(); ++i) {
    const double sq = std::norm(amps[i]);
    if (sq > best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  return best;
}

struct RestartOutcome {
  LocalFrame frame{1};
  std::vector<Complex> amps;
  double leading_sq = 0.0;
  int sweeps = 0;
  bool converged = false;
  double max_single = 0.0;
};

RestartOutcome run_restart(const RegisterState& h, const OptimizerConfig& cfg,
                           int restart_index) {
  const int l = h.num_bits();
  const double sqn = h.squared_norm();
  const double nrm = std::sqrt(sqn);

  RestartOutcome out;
  out.frame = LocalFrame::identity(l);
  out.amps = h.amplitudes();
  if (restart_index > 0) {
    std::mt19937_64 rng(mix_seed(cfg.seed, restart_index));
    out.frame = random_local_frame(l, rng);
    for (int k = 0; k < l; ++k) {
      detail::apply_bit_unitary_in_place(out.amps, out.frame[k], k);
    }
  }

  std::vector<Complex>& g = out.amps;
  const auto max_single_excitation = [&] {
    double m = 0.0;
    for (int k = 0; k < l; ++k) m = std::max(m, std::abs(g[one << k]));
    return m;
  };

  while (out.sweeps < cfg.max_sweeps) {
    ++out.sweeps;
    const double before = std::norm(g[0]);
    for (int m = 0; m < l; ++m) {
      const LocalUnitary u = rotate_bit(g, m);
      out.frame[m] = u * out.frame[m];
    }
    if (std::abs(g[0]) <= cfg.zero_tol * nrm) {
      // Nothing reachable from the empty amplitude: move the largest
      // amplitude onto it by per-bit label swaps and keep sweeping.
      const std::uint64_t target = index_of_max_magnitude(g);
      if (target != 0) {
        const LocalUnitary x = LocalUnitary::bit_flip();
        for (int k = 0; k < l; ++k) {
          if ((target >> k) & one) {
            detail::apply_bit_unitary_in_place(g, x, k);
            out.frame[k] = x * out.frame[k];
          }
        }
        continue;
      }
    }
    const double gain = std::norm(g[0]) - before;
    const double single = max_single_excitation();
    if (gain <= cfg.conv_eps * sqn && single <= cfg.stationarity_tol * nrm) {
      out.converged = true;
      break;
    }
  }
  out.max_single = max_single_excitation();
  out.leading_sq = std::norm(g[0]);
  out.frame = out.frame.reorthonormalized();
  return out;
}

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) {
    throw std::invalid_argument("restarts must be >= 1, got " +
                                std::to_string(cfg.restarts));
  }
  if (cfg.max_sweeps < 1) {
    throw std::invalid_argument("max_sweeps must be >= 1, got " +
                                std::to_string(cfg.max_sweeps));
  }
}

}  // namespace

SweepStep sweep_update_bit(const RegisterState& h, int bit) {
  if (bit < 0 || bit >= h.num_bits()) {
    throw std::out_of_range("bit " + std::to_string(bit) +
                            " out of range for l=" +
                            std::to_string(h.num_bits()));
  }
  std::vector<Complex> amps = h.amplitudes();
  const LocalUnitary u = rotate_bit(amps, bit);
  return SweepStep{u, RegisterState(h.num_bits(), std::move(amps))};
}

OptimizeResult optimize_frame(const RegisterState& h,
                              const OptimizerConfig& cfg) {
  if (h.squared_norm() == 0.0) {
    throw DegenerateInputError(
        "optimize_frame requires a state with positive norm");
  }
  validate_config(cfg);

  const int n = cfg.restarts;
  std::vector<RestartOutcome> outcomes(n);
  int workers = cfg.threads <= 0
                    ? static_cast<int>(std::thread::hardware_concurrency())
                    : cfg.threads;
  workers = std::clamp(workers, 1, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) outcomes[i] = run_restart(h, cfg, i);
  } else {
    // Restarts are independent; each worker owns a strided index set so the
    // collected outcomes do not depend on scheduling.
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (int i = w; i < n; i += workers) {
          outcomes[i] = run_restart(h, cfg, i);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (outcomes[i].leading_sq > outcomes[best].leading_sq) best = i;
  }
  RestartOutcome& win = outcomes[best];
  return OptimizeResult{std::move(win.frame),
                        RegisterState(h.num_bits(), std::move(win.amps)),
                        win.sweeps,
                        n,
                        win.converged,
                        win.max_single};
}

RegisterState ProductTerm::expand() const {
  RegisterState s = tensor_product_state(factors);
  for (std::uint64_t i = 0; i < s.dim(); ++i) s[i] *= coefficient;
  return s;
}

Decomposition decompose(const RegisterState& h, const OptimizerConfig& cfg) {
  OptimizeResult opt = optimize_frame(h, cfg);
  const int l = h.num_bits();
  const double nrm = h.norm();
  const RegisterState& g = opt.state;
  LeadingSplit split = leading_split(g, cfg.zero_tol);

  const LocalFrame& frame = opt.frame;
  const auto back_column = [&](int bit, int value) -> std::array<Complex, 2> {
    // column `value` of frame[bit]† = conjugated row `value` of frame[bit]
    return {std::conj(frame[bit](value, 0)), std::conj(frame[bit](value, 1))};
  };

  Decomposition d;
  d.leading_index = 0;

  // The leading term is the full leading vector of g written as coefficient
  // times unit factors: lv g = c (x)_m (g^0 |0> + g^{m} |1>) / rho_m with
  // c = prod_m rho_m / (g^0)^{l-1}. At stationarity this is g^0 |0...0> up
  // to the residual single-excitation amplitudes, which it absorbs exactly;
  // emitting the bare basis term instead would leak them out of the
  // reconstruction.
  ProductTerm lead;
  lead.source_index = SimplexIndex{0};
  lead.factors.reserve(l);
  {
    const Complex g0 = g[0];
    const double g0_abs = std::abs(g0);
    double scale = g0_abs;  // |g^0| * prod_m (rho_m / |g^0|)
    for (int m = 0; m < l; ++m) {
      const Complex gm = g.single_amplitude(m);
      const double rho = std::sqrt(std::norm(g0) + std::norm(gm));
      scale *= rho / g0_abs;
      const std::array<Complex, 2> u{g0 / rho, gm / rho};
      const LocalUnitary& um = frame[m];
      // adjoint(frame[m]) * u, the factor expressed in the original basis
      lead.factors.push_back(std::array<Complex, 2>{
          std::conj(um(0, 0)) * u[0] + std::conj(um(1, 0)) * u[1],
          std::conj(um(0, 1)) * u[0] + std::conj(um(1, 1)) * u[1]});
    }
    lead.coefficient =
        scale * std::polar(1.0, (1.0 - l) * std::arg(g0));
  }
  d.terms.push_back(std::move(lead));

  const double cut = cfg.zero_tol * nrm;
  for (std::uint64_t s = 0; s < g.dim(); ++s) {
    if (std::popcount(s) < 2) continue;
    const Complex c = split.residual[s];
    if (std::abs(c) <= cut) continue;
    ProductTerm t;
    t.coefficient = c;
    t.source_index = SimplexIndex{s};
    t.factors.reserve(l);
    for (int m = 0; m < l; ++m) {
      t.factors.push_back(back_column(m, static_cast<int>((s >> m) & one)));
    }
    d.terms.push_back(std::move(t));
  }

  d.diagnostics.sweeps = opt.sweeps;
  d.diagnostics.restarts_used = opt.restarts_used;
  d.diagnostics.converged = opt.converged;
  d.diagnostics.leading_sq_norm = split.kappa;
  d.diagnostics.residual_sq_norm = split.residual.squared_norm();
  d.diagnostics.max_single_excitation = opt.max_single_excitation;
  d.diagnostics.kappa_at_optimum = split.kappa;
  d.frame = std::move(opt.frame);
  return d;
}

std::size_t term_count(const Decomposition& d, double zero_tol) {
  double sq = 0.0;
  for (const ProductTerm& t : d.terms) sq += std::norm(t.coefficient);
  const double cut = zero_tol * std::sqrt(sq);
  std::size_t count = 0;
  for (const ProductTerm& t : d.terms) {
    if (std::abs(t.coefficient) > cut) ++count;
  }
  return count;
}

RegisterState reconstruct(const Decomposition& d) {
  const int l = d.frame.num_bits();
  // Residual terms are basis vectors of the optimized frame, so their sum is
  // one adjoint-frame application away; the leading term has product
  // structure of its own and is expanded from its stored factors.
  std::vector<Complex> coeffs(one << l, Complex(0, 0));
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    if (i == d.leading_index) continue;
    coeffs[d.terms[i].source_index.bits] = d.terms[i].coefficient;
  }
  RegisterState sum = apply_local_frame(RegisterState(l, std::move(coeffs)),
                                        d.frame.adjoint());
  const RegisterState lead = d.terms[d.leading_index].expand();
  for (std::uint64_t i = 0; i < sum.dim(); ++i) sum[i] += lead[i];
  return sum;
}

}  // namespace leadvec

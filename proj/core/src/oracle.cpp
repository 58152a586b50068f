#include "leadvec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "leadvec/local_unitary.hpp"
#include "leadvec/rng.hpp"

namespace leadvec {

namespace {

constexpr std::uint64_t one = 1;

void require_nonzero(const RegisterState& h, const char* op) {
  if (h.squared_norm() == 0.0) {
    throw DegenerateInputError(std::string(op) +
                               " requires a state with positive norm");
  }
}

/// |<0...0| F h>| without forming F h: sum over s of h^s times the product
/// of the row-0 entries selected by the bits of s.
double leading_after(const RegisterState& h, const LocalFrame& f) {
  const int l = h.num_bits();
  Complex acc = 0.0;
  for (std::uint64_t s = 0; s < h.dim(); ++s) {
    Complex prod = h[s];
    for (int m = 0; m < l; ++m) {
      prod *= f[m](0, static_cast<int>((s >> m) & one));
    }
    acc += prod;
  }
  return std::abs(acc);
}

/// Local ascent from a candidate frame: repeat per-bit moves built with the
/// generic from_top_row / apply machinery (a code path separate from the
/// production sweep) until the empty amplitude stops growing.
double polish(const RegisterState& h, const LocalFrame& start) {
  std::vector<Complex> g =
      apply_local_frame(h, start).release_amplitudes();
  const int l = h.num_bits();
  double prev = std::norm(g[0]);
  for (int round = 0; round < 400; ++round) {
    for (int m = 0; m < l; ++m) {
      const Complex a = g[0];
      const Complex b = g[one << m];
      if (std::norm(a) + std::norm(b) == 0.0) continue;
      const LocalUnitary u =
          LocalUnitary::from_top_row(std::conj(a), std::conj(b));
      detail::apply_bit_unitary_in_place(g, u, m);
    }
    const double now = std::norm(g[0]);
    if (now - prev <= 1e-15 * h.squared_norm()) {
      prev = now;
      break;
    }
    prev = now;
  }
  return std::sqrt(prev);
}

}  // namespace

SchmidtResult schmidt_svd(const RegisterState& h) {
  if (h.num_bits() != 2) {
    throw std::invalid_argument("schmidt_svd requires l=2, got l=" +
                                std::to_string(h.num_bits()));
  }
  require_nonzero(h, "schmidt_svd");

  // M[a][b] = amplitude at index a + 2b (bit 0 = row, bit 1 = column).
  const Complex m00 = h[0], m01 = h[2], m10 = h[1], m11 = h[3];

  // Eigensystem of A = M†M.
  const double a00 = std::norm(m00) + std::norm(m10);
  const double a11 = std::norm(m01) + std::norm(m11);
  const Complex a01 = std::conj(m00) * m01 + std::conj(m10) * m11;
  const double tr = a00 + a11;
  const double disc =
      std::sqrt((a00 - a11) * (a00 - a11) + 4.0 * std::norm(a01));
  double l1 = 0.5 * (tr + disc);
  const Complex det_m = m00 * m11 - m01 * m10;
  double l2 = l1 > 0.0 ? std::norm(det_m) / l1 : 0.0;
  l1 = std::max(l1, 0.0);
  l2 = std::clamp(l2, 0.0, l1);

  // Eigenvector for l1: take the better-conditioned of the two analytic
  // candidates; both degenerate only when A is (near) a multiple of I.
  std::array<Complex, 2> v1{Complex(1, 0), Complex(0, 0)};
  const std::array<Complex, 2> cand_a{a01, Complex(l1 - a00, 0)};
  const std::array<Complex, 2> cand_b{Complex(l1 - a11, 0), std::conj(a01)};
  const double na = std::norm(cand_a[0]) + std::norm(cand_a[1]);
  const double nb = std::norm(cand_b[0]) + std::norm(cand_b[1]);
  const double pick = std::max(na, nb);
  if (pick > tr * tr * 1e-28) {
    const auto& c = na >= nb ? cand_a : cand_b;
    const double inv = 1.0 / std::sqrt(na >= nb ? na : nb);
    v1 = {c[0] * inv, c[1] * inv};
  } else if (a11 > a00) {
    v1 = {Complex(0, 0), Complex(1, 0)};
  }
  const std::array<Complex, 2> v2{-std::conj(v1[1]), std::conj(v1[0])};

  SchmidtResult r;
  r.sigma = {std::sqrt(l1), std::sqrt(l2)};
  // right_i stored conjugated so that sum_i sigma_i left_i (x) right_i
  // reproduces M[a][b] = sum_i sigma_i u_i[a] conj(v_i[b]).
  r.right_vectors = {std::array<Complex, 2>{std::conj(v1[0]), std::conj(v1[1])},
                     std::array<Complex, 2>{std::conj(v2[0]), std::conj(v2[1])}};

  const auto apply_m = [&](const std::array<Complex, 2>& v) {
    return std::array<Complex, 2>{m00 * v[0] + m01 * v[1],
                                  m10 * v[0] + m11 * v[1]};
  };
  std::array<Complex, 2> u1 = apply_m(v1);
  const double u1n = std::sqrt(std::norm(u1[0]) + std::norm(u1[1]));
  u1 = {u1[0] / u1n, u1[1] / u1n};
  std::array<Complex, 2> u2;
  if (r.sigma[1] > 1e-14 * r.sigma[0]) {
    u2 = apply_m(v2);
    const double u2n = std::sqrt(std::norm(u2[0]) + std::norm(u2[1]));
    u2 = {u2[0] / u2n, u2[1] / u2n};
  } else {
    u2 = {-std::conj(u1[1]), std::conj(u1[0])};
  }
  r.left_vectors = {u1, u2};
  return r;
}

double brute_force_max_leading(const RegisterState& h, int samples,
                               std::uint64_t seed) {
  if (h.num_bits() > 3) {
    throw std::invalid_argument(
        "brute_force_max_leading is guarded to l <= 3, got l=" +
        std::to_string(h.num_bits()));
  }
  if (samples < 10000) {
    throw std::invalid_argument("brute_force_max_leading needs >= 10000 "
                                "samples, got " +
                                std::to_string(samples));
  }
  require_nonzero(h, "brute_force_max_leading");

  const int l = h.num_bits();
  std::mt19937_64 rng(seed);

  constexpr int keep = 10;
  std::vector<std::pair<double, LocalFrame>> top;
  top.reserve(keep);
  for (int i = 0; i < samples; ++i) {
    LocalFrame f = random_local_frame(l, rng);
    const double val = leading_after(h, f);
    if (top.size() < keep) {
      top.emplace_back(val, std::move(f));
      continue;
    }
    auto worst = std::min_element(
        top.begin(), top.end(),
        [](const auto& x, const auto& y) { return x.first < y.first; });
    if (val > worst->first) *worst = {val, std::move(f)};
  }

  double best = 0.0;
  for (const auto& [val, frame] : top) {
    best = std::max(best, polish(h, frame));
  }
  return best;
}

RegisterState naive_leading_vector(const RegisterState& h, double zero_tol) {
  if (h.num_bits() > 10) {
    throw std::invalid_argument(
        "naive_leading_vector is guarded to l <= 10, got l=" +
        std::to_string(h.num_bits()));
  }
  const double nrm = h.norm();
  const Complex a0 = h[0];
  if (nrm == 0.0 || std::abs(a0) <= zero_tol * nrm) {
    throw LeadingUndefinedError(
        "leading vector undefined: |h^0| is below zero_tol * ||h||");
  }
  const int l = h.num_bits();

  // Literal Kronecker expansion of (x)_k (h^0 |0> + h^{k} |1>) ...
  std::vector<Complex> v(h.dim());
  v[0] = Complex(1, 0);
  for (int k = 0; k < l; ++k) {
    const std::uint64_t block = one << k;
    for (std::uint64_t i = 0; i < block; ++i) {
      const Complex lo = v[i];
      v[i] = lo * a0;
      v[i | block] = lo * h.single_amplitude(k);
    }
  }
  // ... divided by (h^0)^{l-1}.
  Complex denom(1, 0);
  for (int k = 0; k < l - 1; ++k) denom *= a0;
  for (Complex& x : v) x /= denom;
  return RegisterState(l, std::move(v));
}

DefectTriple worst_defect_full_scan(const RegisterState& h) {
  if (h.num_bits() > 8) {
    throw std::invalid_argument(
        "worst_defect_full_scan is guarded to l <= 8, got l=" +
        std::to_string(h.num_bits()));
  }
  require_nonzero(h, "worst_defect_full_scan");

  DefectTriple worst;
  double worst_sq = -1.0;
  const std::uint64_t dim = h.dim();
  for (std::uint64_t s = 0; s < dim; ++s) {
    for (int v = 0; v < h.num_bits(); ++v) {
      if (!((s >> v) & one)) continue;
      const std::uint64_t vbit = one << v;
      for (std::uint64_t t = 0; t < dim; ++t) {
        if ((t >> v) & one) continue;
        const Complex d = h[s] * h[t] - h[s ^ vbit] * h[t | vbit];
        const double sq = std::norm(d);
        if (sq > worst_sq) {
          worst_sq = sq;
          worst = DefectTriple{SimplexIndex{s}, SimplexIndex{t}, v, d};
        }
      }
    }
  }
  return worst;
}

bool is_product_full_scan(const RegisterState& h, double tol) {
  const DefectTriple worst = worst_defect_full_scan(h);
  return std::abs(worst.value) <= tol * h.squared_norm();
}

}  // namespace leadvec

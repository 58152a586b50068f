#include "leadvec/local_unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "leadvec/rng.hpp"

namespace leadvec {

LocalUnitary LocalUnitary::from_top_row(Complex a, Complex b) {
  const double r = std::sqrt(std::norm(a) + std::norm(b));
  if (r == 0.0) {
    throw std::invalid_argument("cannot build a unitary from a zero row");
  }
  const Complex na = a / r;
  const Complex nb = b / r;
  return LocalUnitary(na, nb, -std::conj(nb), std::conj(na));
}

double LocalUnitary::unitarity_defect() const {
  // U U† - I for a 2x2 matrix, entry by entry.
  const Complex d00 =
      m_[0] * std::conj(m_[0]) + m_[1] * std::conj(m_[1]) - Complex(1, 0);
  const Complex d01 = m_[0] * std::conj(m_[2]) + m_[1] * std::conj(m_[3]);
  const Complex d11 =
      m_[2] * std::conj(m_[2]) + m_[3] * std::conj(m_[3]) - Complex(1, 0);
  return std::max({std::abs(d00), std::abs(d01), std::abs(d11)});
}

LocalUnitary LocalUnitary::reorthonormalized() const {
  Complex r0[2] = {m_[0], m_[1]};
  const double n0 = std::sqrt(std::norm(r0[0]) + std::norm(r0[1]));
  r0[0] /= n0;
  r0[1] /= n0;
  Complex r1[2] = {m_[2], m_[3]};
  const Complex proj = std::conj(r0[0]) * r1[0] + std::conj(r0[1]) * r1[1];
  r1[0] -= proj * r0[0];
  r1[1] -= proj * r0[1];
  const double n1 = std::sqrt(std::norm(r1[0]) + std::norm(r1[1]));
  r1[0] /= n1;
  r1[1] /= n1;
  return LocalUnitary(r0[0], r0[1], r1[0], r1[1]);
}

LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b) {
  return LocalUnitary(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
                      a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                      a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
                      a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

LocalFrame::LocalFrame(int num_bits) : us_(num_bits) {
  if (num_bits < 1 || num_bits > max_register_bits) {
    throw std::out_of_range("frame length must be in [1, " +
                            std::to_string(max_register_bits) + "], got " +
                            std::to_string(num_bits));
  }
}

LocalFrame::LocalFrame(std::vector<LocalUnitary> unitaries)
    : us_(std::move(unitaries)) {
  if (us_.empty() || us_.size() > max_register_bits) {
    throw std::out_of_range("frame length must be in [1, " +
                            std::to_string(max_register_bits) + "], got " +
                            std::to_string(us_.size()));
  }
}

LocalFrame LocalFrame::bit_flips(int num_bits, std::uint64_t mask) {
  LocalFrame f(num_bits);
  for (int k = 0; k < num_bits; ++k) {
    if ((mask >> k) & 1u) f[k] = LocalUnitary::bit_flip();
  }
  return f;
}

LocalFrame LocalFrame::adjoint() const {
  std::vector<LocalUnitary> us;
  us.reserve(us_.size());
  for (const LocalUnitary& u : us_) us.push_back(u.adjoint());
  return LocalFrame(std::move(us));
}

LocalFrame LocalFrame::reorthonormalized() const {
  std::vector<LocalUnitary> us;
  us.reserve(us_.size());
  for (const LocalUnitary& u : us_) us.push_back(u.reorthonormalized());
  return LocalFrame(std::move(us));
}

LocalFrame compose(const LocalFrame& outer, const LocalFrame& inner) {
  if (outer.num_bits() != inner.num_bits()) {
    throw std::invalid_argument("cannot compose frames of different length");
  }
  std::vector<LocalUnitary> us;
  us.reserve(outer.num_bits());
  for (int k = 0; k < outer.num_bits(); ++k) us.push_back(outer[k] * inner[k]);
  return LocalFrame(std::move(us));
}

namespace detail {

void apply_bit_unitary_in_place(std::vector<Complex>& amps,
                                const LocalUnitary& u, int bit) {
  const std::uint64_t half = std::uint64_t{1} << bit;
  const std::uint64_t dim = amps.size();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t base = 0; base < dim; base += half << 1) {
    for (std::uint64_t off = 0; off < half; ++off) {
      Complex& x0 = amps[base + off];
      Complex& x1 = amps[base + off + half];
      const Complex t0 = u00 * x0 + u01 * x1;
      const Complex t1 = u10 * x0 + u11 * x1;
      x0 = t0;
      x1 = t1;
    }
  }
}

}  // namespace detail

RegisterState apply_bit_unitary(const RegisterState& h, const LocalUnitary& u,
                                int bit) {
  if (bit < 0 || bit >= h.num_bits()) {
    throw std::out_of_range("bit " + std::to_string(bit) +
                            " out of range for l=" +
                            std::to_string(h.num_bits()));
  }
  std::vector<Complex> amps = h.amplitudes();
  detail::apply_bit_unitary_in_place(amps, u, bit);
  return RegisterState(h.num_bits(), std::move(amps));
}

RegisterState apply_local_frame(const RegisterState& h, const LocalFrame& f,
                                double unitary_tol) {
  if (f.num_bits() != h.num_bits()) {
    throw std::invalid_argument(
        "frame has " + std::to_string(f.num_bits()) + " unitaries but the state has l=" +
        std::to_string(h.num_bits()));
  }
  for (int k = 0; k < f.num_bits(); ++k) {
    const double defect = f[k].unitarity_defect();
    if (!(defect <= unitary_tol)) {
      throw std::invalid_argument("frame entry for bit " + std::to_string(k) +
                                  " is not unitary (defect " +
                                  std::to_string(defect) + ")");
    }
  }
  std::vector<Complex> amps = h.amplitudes();
  for (int k = 0; k < f.num_bits(); ++k) {
    detail::apply_bit_unitary_in_place(amps, f[k], k);
  }
  return RegisterState(h.num_bits(), std::move(amps));
}

LocalUnitary random_local_unitary(std::mt19937_64& rng) {
  const double theta = uniform_in(rng, 0.0, std::numbers::pi / 2.0);
  const double pa = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
  const double pb = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
  const Complex a = std::polar(std::cos(theta), pa);
  const Complex b = std::polar(std::sin(theta), pb);
  return LocalUnitary(a, b, -std::conj(b), std::conj(a));
}

LocalFrame random_local_frame(int num_bits, std::mt19937_64& rng) {
  std::vector<LocalUnitary> us;
  us.reserve(num_bits);
  for (int k = 0; k < num_bits; ++k) us.push_back(random_local_unitary(rng));
  return LocalFrame(std::move(us));
}

}  // namespace leadvec

#include "leadvec/register_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "leadvec/rng.hpp"

namespace leadvec {

namespace {

void check_num_bits(int num_bits) {
  if (num_bits < 1 || num_bits > max_register_bits) {
    throw std::out_of_range("register length must be in [1, " +
                            std::to_string(max_register_bits) + "], got " +
                            std::to_string(num_bits));
  }
}

}  // namespace

RegisterState::RegisterState(int num_bits, std::vector<Complex> amplitudes)
    : num_bits_(num_bits), amps_(std::move(amplitudes)) {
  check_num_bits(num_bits);
  const std::uint64_t expected = std::uint64_t{1} << num_bits;
  if (amps_.size() != expected) {
    throw std::invalid_argument(
        "expected " + std::to_string(expected) + " amplitudes for l=" +
        std::to_string(num_bits) + ", got " + std::to_string(amps_.size()));
  }
}

RegisterState RegisterState::zero(int num_bits) {
  check_num_bits(num_bits);
  return RegisterState(num_bits,
                       std::vector<Complex>(std::uint64_t{1} << num_bits));
}

RegisterState RegisterState::basis(int num_bits, std::uint64_t index) {
  RegisterState s = zero(num_bits);
  if (index >= s.dim()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for l=" + std::to_string(num_bits));
  }
  s[index] = Complex(1, 0);
  return s;
}

double RegisterState::squared_norm() const {
  double acc = 0.0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return acc;
}

double RegisterState::norm() const { return std::sqrt(squared_norm()); }

std::vector<std::pair<SimplexIndex, Complex>> skeleton(const RegisterState& h,
                                                       int n,
                                                       bool include_zeros,
                                                       double zero_tol) {
  if (n < -1 || n > h.num_bits() - 1) {
    throw std::out_of_range("skeleton grade " + std::to_string(n) +
                            " out of range [-1, " +
                            std::to_string(h.num_bits() - 1) + "]");
  }
  const int want = n + 1;
  const double cut = zero_tol * h.norm();
  std::vector<std::pair<SimplexIndex, Complex>> out;
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    if (std::popcount(i) != want) continue;
    if (!include_zeros && std::abs(h[i]) <= cut) continue;
    out.emplace_back(SimplexIndex{i}, h[i]);
  }
  return out;
}

Complex inner_product(const RegisterState& a, const RegisterState& b) {
  if (a.num_bits() != b.num_bits()) {
    throw std::invalid_argument("inner product of states with l=" +
                                std::to_string(a.num_bits()) + " and l=" +
                                std::to_string(b.num_bits()));
  }
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

std::size_t nonzero_count(const RegisterState& h, double zero_tol,
                          double reference_norm) {
  const double ref = reference_norm < 0.0 ? h.norm() : reference_norm;
  const double cut = zero_tol * ref;
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    if (std::abs(h[i]) > cut) ++count;
  }
  return count;
}

RegisterState random_state(int num_bits, std::uint64_t seed) {
  check_num_bits(num_bits);
  std::mt19937_64 rng(seed);
  std::vector<Complex> amps(std::uint64_t{1} << num_bits);
  double sq = 0.0;
  for (Complex& a : amps) {
    a = gaussian_complex(rng);
    sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(sq);
  for (Complex& a : amps) a *= inv;
  return RegisterState(num_bits, std::move(amps));
}

RegisterState make_ghz(int num_bits) {
  RegisterState s = RegisterState::zero(num_bits);
  const double r = 1.0 / std::sqrt(2.0);
  s[0] = Complex(r, 0);
  s[s.dim() - 1] = Complex(r, 0);
  return s;
}

RegisterState make_w(int num_bits) {
  RegisterState s = RegisterState::zero(num_bits);
  const double r = 1.0 / std::sqrt(static_cast<double>(num_bits));
  for (int k = 0; k < num_bits; ++k) {
    s[std::uint64_t{1} << k] = Complex(r, 0);
  }
  return s;
}

RegisterState tensor_product_state(
    const std::vector<std::array<Complex, 2>>& factors) {
  const int l = static_cast<int>(factors.size());
  check_num_bits(l);
  std::vector<Complex> amps(std::uint64_t{1} << l);
  amps[0] = Complex(1, 0);
  for (int k = 0; k < l; ++k) {
    const std::uint64_t block = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < block; ++i) {
      const Complex lo = amps[i];
      amps[i] = lo * factors[k][0];
      amps[i | block] = lo * factors[k][1];
    }
  }
  return RegisterState(l, std::move(amps));
}

}  // namespace leadvec

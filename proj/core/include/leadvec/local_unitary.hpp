// local_unitary.hpp — 2x2 unitaries acting on single register bits, and
// frames (one unitary per bit) realizing tensor-product basis changes.
#pragma once

#include <random>
#include <vector>

#include "leadvec/register_state.hpp"
#include "leadvec/types.hpp"

namespace leadvec {

class LocalUnitary {
 public:
  /// Identity.
  LocalUnitary()
      : m_{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)} {}

  /// Row-major entries; no validation here, see is_unitary().
  LocalUnitary(Complex m00, Complex m01, Complex m10, Complex m11)
      : m_{m00, m01, m10, m11} {}

  static LocalUnitary identity() { return LocalUnitary(); }

  /// Label swap |0> <-> |1>.
  static LocalUnitary bit_flip() {
    return LocalUnitary(Complex(0), Complex(1), Complex(1), Complex(0));
  }

  /// Unitary whose top row is (a, b) normalized; the bottom row is the
  /// orthogonal complement (-conj(b), conj(a)) / r.
  static LocalUnitary from_top_row(Complex a, Complex b);

  Complex operator()(int row, int col) const { return m_[row * 2 + col]; }

  LocalUnitary adjoint() const {
    return LocalUnitary(std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                        std::conj(m_[3]));
  }

  /// Largest |entry| of U U† - I.
  double unitarity_defect() const;

  bool is_unitary(double tol = 1e-12) const {
    return unitarity_defect() <= tol;
  }

  /// Gram-Schmidt on the rows; long products of sweep rotations drift and
  /// need an occasional cleanup.
  LocalUnitary reorthonormalized() const;

  /// Matrix product (a then applied after b when acting on amplitudes).
  friend LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b);

 private:
  Complex m_[4];
};

/// One unitary per register bit; entry m acts on bit m.
class LocalFrame {
 public:
  /// All-identity frame.
  explicit LocalFrame(int num_bits);
  explicit LocalFrame(std::vector<LocalUnitary> unitaries);

  static LocalFrame identity(int num_bits) { return LocalFrame(num_bits); }
  /// Bit flips on exactly the bits set in `mask`, identity elsewhere.
  static LocalFrame bit_flips(int num_bits, std::uint64_t mask);

  int num_bits() const { return static_cast<int>(us_.size()); }
  const LocalUnitary& operator[](int bit) const { return us_[bit]; }
  LocalUnitary& operator[](int bit) { return us_[bit]; }

  /// Per-bit adjoint; inverts the frame.
  LocalFrame adjoint() const;
  /// Per-bit row cleanup, see LocalUnitary::reorthonormalized.
  LocalFrame reorthonormalized() const;

 private:
  std::vector<LocalUnitary> us_;
};

/// Per-bit composition: applying the result equals applying `inner` then
/// `outer`.
LocalFrame compose(const LocalFrame& outer, const LocalFrame& inner);

/// g = (U_0 x U_1 x ... x U_{l-1}) h acting on the amplitude vector.
/// Throws std::invalid_argument on frame length mismatch or when some entry
/// fails the unitarity check at `unitary_tol`.
RegisterState apply_local_frame(const RegisterState& h, const LocalFrame& f,
                                double unitary_tol = 1e-12);

/// Single-bit action of `u` on bit `bit` (unvalidated matrix).
RegisterState apply_bit_unitary(const RegisterState& h, const LocalUnitary& u,
                                int bit);

/// Unitary from three uniform angles (mixing angle plus two phases; the
/// remaining column phase does not move |g^0| and is fixed to zero).
LocalUnitary random_local_unitary(std::mt19937_64& rng);
LocalFrame random_local_frame(int num_bits, std::mt19937_64& rng);

namespace detail {
void apply_bit_unitary_in_place(std::vector<Complex>& amps,
                                const LocalUnitary& u, int bit);
}

}  // namespace leadvec

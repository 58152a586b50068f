// errors.hpp — exception types for the failure modes callers are expected to
// branch on. Shape/range violations use the std exception types directly.
#pragma once

#include <stdexcept>
#include <string>

#include "leadvec/types.hpp"

namespace leadvec {

/// One exchangeability-condition triple together with its defect value
/// h^s h^t - h^{s \ v} h^{t u v}.
struct DefectTriple {
  SimplexIndex s;
  SimplexIndex t;
  int bit = -1;  // the exchanged vertex; -1 when no triple exists (l == 1)
  Complex value = 0.0;
};

/// The all-zero state was passed where a normalizable state is required.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The empty-simplex amplitude is too small for the leading vector to be
/// defined; relabel or optimize the frame first.
class LeadingUndefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factorization was requested for a state that fails the exchangeability
/// test; carries the worst offending triple.
class NotProductError : public std::runtime_error {
 public:
  NotProductError(const std::string& what, DefectTriple worst, double tolerance)
      : std::runtime_error(what), worst_(worst), tolerance_(tolerance) {}

  const DefectTriple& worst_defect() const { return worst_; }
  double tolerance() const { return tolerance_; }

 private:
  DefectTriple worst_;
  double tolerance_;
};

}  // namespace leadvec

#pragma once

#include <stdexcept>

namespace specht {

/// Thrown when values over incompatible (n, e) are combined.
class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a decomposition-theoretic operation is requested for a
/// modulus pair (e, p) outside p = 0, p = e, gcd(p, e) = 1. The closed
/// formulas are only certified there, so we refuse rather than extrapolate
/// silently.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace specht

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace specht {

/// Sparse Laurent polynomial in q with integer coefficients.
///
/// The stored form is canonical: zero coefficients are never kept, so
/// structural equality is algebraic equality. Exponents may be negative.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;

  static LaurentPoly constant(Coeff c);
  /// The monomial q^k.
  static LaurentPoly q_power(int k);
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff coeff(int exponent) const;
  /// Smallest/largest exponent with nonzero coefficient; invalid on zero.
  int min_exponent() const;
  int max_exponent() const;

  /// The bar involution q -> q^{-1}.
  LaurentPoly bar() const;

  /// Evaluation at q = 1.
  Coeff at_one() const;

  /// Adds c * q^exponent, dropping the term if it cancels.
  void add_term(int exponent, Coeff c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  bool operator==(const LaurentPoly&) const = default;
  auto operator<=>(const LaurentPoly&) const = default;

  /// Term map keyed by exponent; values are nonzero.
  const std::map<int, Coeff>& terms() const { return terms_; }

  /// Rendering with terms in descending exponent, e.g. "q^2 - 2 + q^-1".
  /// Zero renders as "0", q^1 as "q".
  std::string str() const;

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace specht

#pragma once

#include <map>
#include <string>

#include "specht/laurent.hpp"
#include "specht/residue.hpp"

namespace specht {

/// An element of the free Z[q,q^-1]-module on I^n: a finitely supported map
/// from residue sequences to Laurent polynomials. Zero coefficients are
/// never stored, so equality is structural.
class Character {
 public:
  Character(int n, int modulus) : n_(n), modulus_(modulus) {}

  int n() const { return n_; }
  int modulus() const { return modulus_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  const std::map<ResidueSequence, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const ResidueSequence& i) const;

  /// Adds f at key i; drops the key if the coefficient cancels to zero.
  void add(const ResidueSequence& i, const LaurentPoly& f);

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character& operator+=(const Character& o);

  /// Pointwise scalar multiplication by f.
  Character scaled(const LaurentPoly& f) const;

  /// Applies the bar involution to every coefficient; keys are unchanged.
  Character bar() const;

  /// Sum over all keys of the coefficient evaluated at q = 1. For the
  /// character of a tableau set this is the cardinality of the set.
  LaurentPoly::Coeff mass_at_one() const;

  bool operator==(const Character&) const = default;

  std::string str() const;

 private:
  void require_compatible(const Character& o) const;
  void require_key(const ResidueSequence& i) const;

  int n_;
  int modulus_;
  std::map<ResidueSequence, LaurentPoly> terms_;
};

}  // namespace specht

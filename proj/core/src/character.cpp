#include "specht/character.hpp"

#include "specht/errors.hpp"

namespace specht {

LaurentPoly Character::coeff(const ResidueSequence& i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void Character::require_compatible(const Character& o) const {
  if (n_ != o.n_ || modulus_ != o.modulus_)
    throw DimensionMismatchError("characters live in different <I^n>");
}

void Character::require_key(const ResidueSequence& i) const {
  if (static_cast<int>(i.size()) != n_ || i.modulus() != modulus_)
    throw DimensionMismatchError("residue sequence does not match character ambient (n, e)");
}

void Character::add(const ResidueSequence& i, const LaurentPoly& f) {
  require_key(i);
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(i, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  require_compatible(o);
  for (const auto& [i, f] : o.terms_) add(i, f);
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character c = *this;
  c += o;
  return c;
}

Character Character::operator-(const Character& o) const {
  require_compatible(o);
  Character c = *this;
  for (const auto& [i, f] : o.terms_) c.add(i, -f);
  return c;
}

Character Character::scaled(const LaurentPoly& f) const {
  Character c(n_, modulus_);
  if (f.is_zero()) return c;
  for (const auto& [i, g] : terms_) c.add(i, g * f);
  return c;
}

Character Character::bar() const {
  Character c(n_, modulus_);
  for (const auto& [i, f] : terms_) c.terms_.emplace(i, f.bar());
  return c;
}

LaurentPoly::Coeff Character::mass_at_one() const {
  LaurentPoly::Coeff s = 0;
  for (const auto& [i, f] : terms_) s += f.at_one();
  return s;
}

std::string Character::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, f] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + f.str() + ")*" + i.str();
  }
  return out;
}

}  // namespace specht

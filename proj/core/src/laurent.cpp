#include "specht/laurent.hpp"

#include <stdexcept>

namespace specht {

LaurentPoly LaurentPoly::constant(Coeff c) {
  LaurentPoly f;
  f.add_term(0, c);
  return f;
}

LaurentPoly LaurentPoly::q_power(int k) {
  LaurentPoly f;
  f.add_term(k, 1);
  return f;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly f;
  for (const auto& [k, c] : terms_) f.terms_.emplace(-k, c);
  return f;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f;
  for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly f = *this;
  f += o;
  return f;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly f = *this;
  f -= o;
  return f;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly f;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) f.add_term(k1 + k2, c1 * c2);
  return f;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [k, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Coeff a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k != 0) {
      out += "q";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace specht

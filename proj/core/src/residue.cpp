#include "specht/residue.hpp"

#include <stdexcept>

namespace specht {

namespace {

int reduce(long long value, int modulus) {
  if (modulus < 2) throw std::invalid_argument("residue modulus must be >= 2");
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

char digit_char(int v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw std::invalid_argument("invalid residue digit");
}

}  // namespace

Residue::Residue(long long value, int modulus)
    : value_(reduce(value, modulus)), modulus_(modulus) {}

ResidueSequence::ResidueSequence(int modulus, std::vector<int> values)
    : modulus_(modulus), values_(std::move(values)) {
  for (int& v : values_) v = reduce(v, modulus_);
}

ResidueSequence ResidueSequence::parse(const std::string& digits, int modulus) {
  ResidueSequence seq(modulus);
  if (modulus <= 36) {
    for (char c : digits) seq.push_back(digit_value(c));
  } else {
    std::size_t pos = 0;
    while (pos < digits.size()) {
      std::size_t next = digits.find(',', pos);
      if (next == std::string::npos) next = digits.size();
      seq.push_back(std::stoll(digits.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  return seq;
}

void ResidueSequence::push_back(long long value) {
  values_.push_back(reduce(value, modulus_));
}

std::string ResidueSequence::str() const {
  std::string out;
  if (modulus_ <= 36) {
    out.reserve(values_.size());
    for (int v : values_) out += digit_char(v);
  } else {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

}  // namespace specht

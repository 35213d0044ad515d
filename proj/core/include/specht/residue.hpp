#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace specht {

/// An element of Z/eZ, stored as its representative in [0, e).
class Residue {
 public:
  Residue(long long value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  Residue operator+(long long k) const { return Residue(value_ + k, modulus_); }
  Residue operator-(long long k) const { return Residue(value_ - k, modulus_); }

  auto operator<=>(const Residue&) const = default;

 private:
  int value_;
  int modulus_;
};

/// An element of I^n for I = Z/eZ: the residue word attached to a tableau
/// or path. All entries share one modulus.
class ResidueSequence {
 public:
  explicit ResidueSequence(int modulus) : modulus_(modulus) {}
  ResidueSequence(int modulus, std::vector<int> values);

  /// Parses the compact digit form produced by str(), e.g. "01220101".
  static ResidueSequence parse(const std::string& digits, int modulus);

  int modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  void push_back(long long value);

  /// Digit string, one character per entry ("0"-"9" then "a"-"z");
  /// comma-separated for modulus > 36.
  std::string str() const;

  bool operator==(const ResidueSequence&) const = default;
  auto operator<=>(const ResidueSequence&) const = default;

 private:
  int modulus_;
  std::vector<int> values_;
};

}  // namespace specht

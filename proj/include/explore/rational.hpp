#pragma once

#include <compare>
#include <string>

#include "explore/weight.hpp"

namespace explore {

// Nonnegative reduced fraction. Comparison never multiplies, so it is safe
// for numerators and denominators near the 128-bit limit.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Weight num, Weight den);

  const Weight& num() const { return num_; }
  const Weight& den() const { return den_; }
  double to_double() const;
  std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Weight num_;
  Weight den_;
};

Weight gcd(Weight a, Weight b);

}  // namespace explore

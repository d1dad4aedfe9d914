#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "explore/error.hpp"

namespace explore {

// Nonnegative exact integer with checked arithmetic. Stored as two 64-bit
// halves so containers of edges stay 8-byte aligned.
class Weight {
 public:
  using Rep = unsigned __int128;

  constexpr Weight() = default;
  constexpr Weight(std::uint64_t v) : lo_(v), hi_(0) {}  // NOLINT(implicit)
  static constexpr Weight from_rep(Rep r) {
    Weight w;
    w.lo_ = static_cast<std::uint64_t>(r);
    w.hi_ = static_cast<std::uint64_t>(r >> 64);
    return w;
  }

  constexpr Rep rep() const { return (static_cast<Rep>(hi_) << 64) | lo_; }
  constexpr bool is_zero() const { return lo_ == 0 && hi_ == 0; }
  constexpr bool fits_u64() const { return hi_ == 0; }
  constexpr std::uint64_t low64() const { return lo_; }
  double to_double() const { return static_cast<double>(hi_) * 18446744073709551616.0 + static_cast<double>(lo_); }

  std::string to_string() const;
  static Weight parse(const std::string& text);

  friend constexpr bool operator==(const Weight& a, const Weight& b) = default;
  friend constexpr std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.hi_ != b.hi_) return a.hi_ <=> b.hi_;
    return a.lo_ <=> b.lo_;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Rep s = a.rep() + b.rep();
    if (s < a.rep()) throw ExploreError(ErrorCode::Overflow, "weight addition overflow");
    return from_rep(s);
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    if (b > a) throw ExploreError(ErrorCode::Overflow, "weight subtraction underflow");
    return from_rep(a.rep() - b.rep());
  }
  friend Weight operator*(const Weight& a, const Weight& b) {
    Rep x = a.rep(), y = b.rep();
    if (x != 0 && y > ~Rep{0} / x) throw ExploreError(ErrorCode::Overflow, "weight multiplication overflow");
    return from_rep(x * y);
  }
  // Exact division; throws if the divisor does not divide.
  friend Weight exact_div(const Weight& a, const Weight& b) {
    if (b.is_zero()) throw ExploreError(ErrorCode::Overflow, "division by zero");
    if (a.rep() % b.rep() != 0) throw ExploreError(ErrorCode::InvalidParameter, "inexact division " + a.to_string() + "/" + b.to_string());
    return from_rep(a.rep() / b.rep());
  }
  friend Weight operator/(const Weight& a, const Weight& b) {
    if (b.is_zero()) throw ExploreError(ErrorCode::Overflow, "division by zero");
    return from_rep(a.rep() / b.rep());
  }
  friend Weight operator%(const Weight& a, const Weight& b) {
    if (b.is_zero()) throw ExploreError(ErrorCode::Overflow, "division by zero");
    return from_rep(a.rep() % b.rep());
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }
  Weight& operator*=(const Weight& o) { return *this = *this * o; }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

Weight pow(Weight base, unsigned exponent);

}  // namespace explore

#include <algorithm>
#include <cctype>

#include "explore/error.hpp"
#include "explore/rational.hpp"
#include "explore/weight.hpp"

namespace explore {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WorldInconsistency: return "WorldInconsistency";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::string Weight::to_string() const {
  Rep v = rep();
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Weight Weight::parse(const std::string& text) {
  if (text.empty()) throw ExploreError(ErrorCode::InvalidParameter, "empty weight literal");
  Weight acc;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ExploreError(ErrorCode::InvalidParameter, "bad weight literal '" + text + "'");
    acc = acc * Weight(10) + Weight(static_cast<std::uint64_t>(c - '0'));
  }
  return acc;
}

Weight pow(Weight base, unsigned exponent) {
  Weight acc(1);
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

Weight gcd(Weight a, Weight b) {
  Weight::Rep x = a.rep(), y = b.rep();
  while (y != 0) {
    Weight::Rep r = x % y;
    x = y;
    y = r;
  }
  return Weight::from_rep(x);
}

Rational::Rational(Weight num, Weight den) {
  if (den.is_zero()) throw ExploreError(ErrorCode::InvalidParameter, "zero denominator");
  Weight g = gcd(num, den);
  if (num.is_zero()) g = den;
  num_ = num / g;
  den_ = den / g;
}

double Rational::to_double() const {
  // Split off the integer part first to keep precision for huge operands.
  Weight q = num_ / den_;
  Weight r = num_ % den_;
  return q.to_double() + r.to_double() / den_.to_double();
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  // Continued-fraction comparison of a/b against c/d.
  using Rep = Weight::Rep;
  Rep a = lhs.num().rep(), b = lhs.den().rep(), c = rhs.num().rep(), d = rhs.den().rep();
  for (;;) {
    Rep q1 = a / b, r1 = a % b, q2 = c / d, r2 = c % d;
    std::strong_ordering res = std::strong_ordering::equal;
    bool done = true;
    if (q1 != q2) {
      res = q1 < q2 ? std::strong_ordering::less : std::strong_ordering::greater;
    } else if (r1 == 0 && r2 == 0) {
      res = std::strong_ordering::equal;
    } else if (r1 == 0) {
      res = std::strong_ordering::less;
    } else if (r2 == 0) {
      res = std::strong_ordering::greater;
    } else {
      // sign(r1/b - r2/d) == sign(d/r2 - b/r1)
      Rep na = d, nb = r2, nc = b, nd = r1;
      a = na; b = nb; c = nc; d = nd;
      done = false;
    }
    if (done) return res;
  }
}

}  // namespace explore

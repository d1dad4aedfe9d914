#include <doctest.h>

#include "printers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "explore/analysis.hpp"
#include "explore/error.hpp"

using namespace explore;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace {

// Independent oracle: closed forms e_i = x(x+y)^i, t_i = y(x+y)^i and the
// U, V recursions written directly over arbitrary precision integers.
struct Oracle {
  BigInt x, y;
  int n;
  std::vector<BigInt> e, t, u, v;  // index i+1 for i = -1..n

  Oracle(unsigned x_, unsigned y_, int n_) : x(x_), y(y_), n(n_) {
    e.push_back(1);
    t.push_back(0);
    u.push_back(1);
    v.push_back(1);
    for (int i = 0; i <= n; ++i) {
      BigInt s = boost::multiprecision::pow(x + y, i);
      e.push_back(x * s);
      t.push_back(y * s);
      u.push_back(x * u.back() + 3 * e.back() - t.back());
      v.push_back((x + 3) * v.back() + e[i + 1] - e[i]);
    }
  }
  BigInt E(int i) const { return e[i + 1]; }
  BigInt U(int i) const { return u[i + 1]; }
  BigInt V(int i) const { return v[i + 1]; }
  BigInt u_closing() const { return x * U(n - 1) + 3 * E(n); }
};

BigInt big(const Weight& w) { return BigInt(w.to_string()); }

}  // namespace

TEST_CASE("formula table agrees with the arbitrary precision oracle") {
  for (unsigned x = 2; x <= 32; ++x)
    for (unsigned y = 0; y <= x / 2; ++y) {
      FormulaTable f = formulas(x, y, 5);
      Oracle o(x, y, 5);
      for (int i = -1; i <= 5; ++i) {
        CHECK(big(f.e_at(i)) == o.E(i));
        CHECK(big(f.t_at(i)) == o.t[i + 1]);
        CHECK(big(f.u_at(i)) == o.U(i));
        CHECK(big(f.v_at(i)) == o.V(i));
      }
      CHECK(big(f.u_closing) == o.u_closing());
    }
}

TEST_CASE("recursion identities hold exactly") {
  for (unsigned x = 2; x <= 32; ++x)
    for (unsigned y = 0; y <= x / 2; ++y) {
      FormulaTable f = formulas(x, y, 5);
      CHECK(f.e_at(0) == Weight(x));
      for (int i = 0; i <= 5; ++i) {
        if (i >= 1) CHECK(f.e_at(i) == Weight(x + y) * f.e_at(i - 1));
        CHECK(closed_form_u(x, y, static_cast<unsigned>(i)) == f.u_at(i));
      }
      if (x % 2 == 0 && y == x / 2)
        for (unsigned n = 0; n <= 5; ++n) {
          FormulaTable g = formulas(x, y, n);
          CHECK(closing_sum_unrolled(x, n) == g.u_closing + Weight(2) * g.e_at(static_cast<int>(n)));
        }
    }
}

TEST_CASE("hand-evaluated points") {
  Params simple50 = make_params(Topology::Simple, 50);
  CHECK(analytic_alg_lower_bound(simple50) == Weight(9950));
  CHECK(opt_formula(simple50) == Weight(5300));
  CHECK(analytic_ratio(simple50).to_string() == "199/106");

  Params simple100 = make_params(Topology::Simple, 100);
  CHECK(analytic_alg_lower_bound(simple100) == Weight(39900));
  CHECK(opt_formula(simple100) == Weight(20600));

  Params rec = make_params(Topology::Rec, 10, 0u, 1u);
  FormulaTable f = formulas(10, 0, 1);
  CHECK(f.u_at(0) == Weight(40));
  CHECK(f.v_at(0) == Weight(22));
  CHECK(f.u_at(1) == Weight(700));
  CHECK(f.v_at(1) == Weight(376));
  CHECK(analytic_alg_lower_bound(rec) == Weight(7000));
  CHECK(opt_formula(rec) == Weight(4888));

  // U_0 = 4x - y, and with y = x/2 the closing sum at level 0 is 6x.
  for (unsigned x = 2; x <= 20; x += 2) {
    CHECK(formulas(x, x / 2, 0).u_at(0) == Weight(4 * x - x / 2));
    FormulaTable c = formulas(x, x / 2, 0);
    CHECK(c.u_closing + Weight(2) * c.e_at(0) == Weight(6 * x));
  }
}

TEST_CASE("lower bounds and optimum formulas match the oracle") {
  for (unsigned x : {4u, 6u, 8u, 12u, 16u})
    for (unsigned n = 0; n <= 3; ++n) {
      Oracle r(x, 0, static_cast<int>(n));
      Params rec = make_params(Topology::Rec, x, 0u, n);
      CHECK(big(analytic_alg_lower_bound(rec)) == BigInt(x) * r.U(static_cast<int>(n)));
      CHECK(big(opt_formula(rec)) == BigInt(x + 3) * r.V(static_cast<int>(n)));

      Oracle c(x, x / 2, static_cast<int>(n));
      Params chain = make_params(Topology::Chain, x, std::nullopt, n);
      CHECK(chain.y == x / 2);
      BigInt xx(x);
      CHECK(big(analytic_alg_lower_bound(chain)) == xx * xx * (c.u_closing() + 2 * c.E(static_cast<int>(n))));
      CHECK(big(opt_formula(chain)) == ((xx + 1) * (xx + 2) + 1) * c.V(static_cast<int>(n)) + (2 * xx - 1) * c.E(static_cast<int>(n)));
    }
}

TEST_CASE("limits") {
  const char* rec[] = {"2/1", "7/3", "5/2", "13/5", "8/3"};
  for (unsigned n = 0; n <= 4; ++n) CHECK(limit_ratio(Topology::Rec, n).to_string() == rec[n]);
  CHECK(limit_ratio(Topology::Simple, 0).to_string() == "2/1");
  CHECK(limit_ratio(Topology::Chain, 0).to_string() == "3/1");
  CHECK(lifted_chain_limit(0).to_string() == "3/1");
  for (unsigned n = 0; n <= 6; ++n) {
    BigRational want = BigRational(10, 3) - BigRational(2, 3 * n + 6);
    Rational got = limit_ratio(Topology::Chain, n);
    CHECK(BigRational(big(got.num()), big(got.den())) == want);
    Rational lifted = lifted_chain_limit(n);
    CHECK(BigRational(big(lifted.num()), big(lifted.den())) == BigRational(10, 3) - BigRational(2, 3 * (n + 2)));
  }
}

TEST_CASE("convergence toward the limits") {
  Rational r = analytic_ratio(make_params(Topology::Rec, 1000, 0u, 1u));
  CHECK(r.to_double() == doctest::Approx(2.321).epsilon(0.001));
  CHECK(r.to_double() > 0.99 * 7.0 / 3.0);
  for (unsigned n = 0; n <= 3; ++n) {
    Rational prev;
    for (unsigned k = 4; k <= 12; ++k) {
      Rational cur = analytic_ratio(make_params(Topology::Rec, 1u << k, 0u, n));
      CHECK(prev < cur);
      prev = cur;
    }
    CHECK(prev.to_double() >= 0.98 * limit_ratio(Topology::Rec, n).to_double());
  }
}

TEST_CASE("parameter validation") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const ExploreError& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([] { make_params(Topology::Simple, 1); }) == ErrorCode::InvalidParameter);
  CHECK(code([] { make_params(Topology::Chain, 5); }) == ErrorCode::InvalidParameter);
  CHECK(code([] { make_params(Topology::Rec, 6, 4u, 1u); }) == ErrorCode::InvalidParameter);
  CHECK(code([] { make_params(Topology::Simple, 6, std::nullopt, 2u); }) == ErrorCode::InvalidParameter);
  CHECK(parse_topology("chain") == Topology::Chain);
}

TEST_CASE("Held-Karp oracle on small graphs") {
  WeightedGraph path(4);
  path.add_edge(0, 1, Weight(1));
  path.add_edge(1, 2, Weight(2));
  path.add_edge(2, 3, Weight(3));
  CHECK(exact_exploration_opt(path, 0, false) == Weight(6));
  CHECK(exact_exploration_opt(path, 0, true) == Weight(12));
  CHECK(exact_exploration_opt(path, 1, false) == Weight(7));

  WeightedGraph star(4);
  for (VertexId v = 1; v < 4; ++v) star.add_edge(0, v, Weight(1));
  CHECK(exact_exploration_opt(star, 0, true) == Weight(6));
  CHECK(exact_exploration_opt(star, 0, false) == Weight(5));

  WeightedGraph large(19);
  CHECK_THROWS_AS(exact_exploration_opt(large, 0, false), ExploreError);
}

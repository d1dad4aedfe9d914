#include "explore/analysis.hpp"

#include <algorithm>
#include <limits>

#include "explore/error.hpp"

namespace explore {

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::Simple: return "simple";
    case Topology::Rec: return "rec";
    case Topology::Chain: return "chain";
  }
  return "?";
}

Topology parse_topology(std::string_view name) {
  if (name == "simple") return Topology::Simple;
  if (name == "rec") return Topology::Rec;
  if (name == "chain") return Topology::Chain;
  throw ExploreError(ErrorCode::InvalidParameter, "unknown topology '" + std::string(name) + "'");
}

Params make_params(Topology topology, std::uint32_t x, std::optional<std::uint32_t> y,
                   std::optional<std::uint32_t> levels) {
  if (x < 2) throw ExploreError(ErrorCode::InvalidParameter, "x must be at least 2");
  if (x > 4096) throw ExploreError(ErrorCode::InvalidParameter, "x above 4096 is not supported");
  Params p;
  p.topology = topology;
  p.x = x;
  switch (topology) {
    case Topology::Simple:
      if (levels.value_or(0) != 0) throw ExploreError(ErrorCode::InvalidParameter, "simple topology has no levels");
      p.y = 0;
      p.levels = 0;
      return p;
    case Topology::Rec:
      p.y = y.value_or(0);
      break;
    case Topology::Chain:
      if (x % 2 != 0) throw ExploreError(ErrorCode::InvalidParameter, "chain topology needs even x");
      p.y = y.value_or(x / 2);
      break;
  }
  if (p.y > x / 2) throw ExploreError(ErrorCode::InvalidParameter, "y must not exceed x/2");
  p.levels = levels.value_or(0);
  if (p.levels > 64) throw ExploreError(ErrorCode::InvalidParameter, "levels above 64 are not supported");
  return p;
}

std::string describe(const Params& p) {
  return std::string(to_string(p.topology)) + "(x=" + std::to_string(p.x) + ",y=" + std::to_string(p.y) +
         ",N=" + std::to_string(p.levels) + ")";
}

FormulaTable formulas(std::uint32_t x, std::uint32_t y, std::uint32_t levels) {
  if (x < 2 || y > x / 2) throw ExploreError(ErrorCode::InvalidParameter, "formulas need x>=2 and y<=x/2");
  FormulaTable f;
  f.x = x;
  f.y = y;
  f.levels = levels;
  const Weight X(x), Y(y);
  f.e = {Weight(1)};
  f.t = {Weight(0)};
  f.u = {Weight(1)};
  f.v = {Weight(1)};
  for (std::uint32_t i = 0; i <= levels; ++i) {
    Weight carry = f.t.back() + f.e.back();
    Weight e = X * carry;
    Weight t = Y * carry;  // equals y * e / x
    f.u.push_back(X * f.u.back() + Weight(3) * e - t);
    f.v.push_back((X + Weight(3)) * f.v.back() + e - f.e.back());
    f.e.push_back(e);
    f.t.push_back(t);
  }
  f.u_closing = X * f.u_at(static_cast<int>(levels) - 1) + Weight(3) * f.e_at(static_cast<int>(levels));
  return f;
}

Weight edge_weight(const Params& p, int level) {
  if (level < -1 || level > static_cast<int>(p.top_level()))
    throw ExploreError(ErrorCode::InvalidParameter, "edge level out of range");
  return formulas(p.x, p.y, p.top_level()).e_at(level);
}

Weight analytic_alg_lower_bound(const Params& p) {
  const Weight X(p.x);
  if (p.topology == Topology::Simple) return Weight(4) * X * X - X;
  FormulaTable f = formulas(p.x, p.y, p.levels);
  const int n = static_cast<int>(p.levels);
  if (p.topology == Topology::Rec) return X * f.u_at(n);
  return X * X * (f.u_closing + Weight(2) * f.e_at(n));
}

Weight opt_formula(const Params& p) {
  const Weight X(p.x);
  if (p.topology == Topology::Simple) return Weight(2) * X * X + Weight(6) * X;
  FormulaTable f = formulas(p.x, p.y, p.levels);
  const int n = static_cast<int>(p.levels);
  if (p.topology == Topology::Rec) return (X + Weight(3)) * f.v_at(n);
  return ((X + Weight(1)) * (X + Weight(2)) + Weight(1)) * f.v_at(n) + (Weight(2) * X - Weight(1)) * f.e_at(n);
}

Rational analytic_ratio(const Params& p) { return Rational(analytic_alg_lower_bound(p), opt_formula(p)); }

Rational limit_ratio(Topology topology, std::uint32_t levels) {
  const Weight n(levels);
  switch (topology) {
    case Topology::Simple: return Rational(Weight(2), Weight(1));
    case Topology::Rec: return Rational(Weight(3) * n + Weight(4), n + Weight(2));
    case Topology::Chain: return Rational(Weight(10) * n + Weight(18), Weight(3) * n + Weight(6));
  }
  throw ExploreError(ErrorCode::InvalidParameter, "topology");
}

Rational lifted_chain_limit(std::uint32_t levels) {
  const Weight k(levels + 2);
  return Rational(Weight(10) * k - Weight(2), Weight(3) * k);
}

Weight closed_form_u(std::uint32_t x, std::uint32_t y, std::uint32_t i) {
  FormulaTable f = formulas(x, y, i);
  const Weight X(x), Y(y);
  Weight sum = pow(X, i + 1);
  for (std::uint32_t j = 0; j <= i; ++j) {
    const Weight& e = f.e_at(static_cast<int>(i - j));
    sum += pow(X, j) * (Weight(3) * e - exact_div(Y * e, X));
  }
  return sum;
}

Weight closing_sum_unrolled(std::uint32_t x, std::uint32_t levels) {
  if (x % 2 != 0) throw ExploreError(ErrorCode::InvalidParameter, "needs even x");
  FormulaTable f = formulas(x, x / 2, levels);
  const Weight X(x);
  Weight sum = pow(X, levels + 1) + Weight(5) * f.e_at(static_cast<int>(levels));
  for (std::uint32_t j = 1; j <= levels; ++j)
    sum += exact_div(Weight(5) * pow(X, j) * f.e_at(static_cast<int>(levels - j)), Weight(2));
  return sum;
}

Weight exact_exploration_opt(const WeightedGraph& graph, VertexId start, bool end_at_start) {
  const std::size_t n = graph.vertex_count();
  if (n > kOracleMaxVertices)
    throw ExploreError(ErrorCode::OracleTooLarge, std::to_string(n) + " vertices exceeds " + std::to_string(kOracleMaxVertices));
  if (!graph.contains(start)) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(start));
  if (n == 1) return Weight(0);

  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max() / 4;
  constexpr std::uint64_t kMaxEdge = std::uint64_t{1} << 40;
  // Relabel so that `start` becomes 0.
  auto label = [&](VertexId v) -> std::size_t { return v == start ? 0 : (v < start ? v + 1 : v); };
  std::vector<std::uint64_t> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Edge& e : graph.edges()) {
    if (e.weight > Weight(kMaxEdge)) throw ExploreError(ErrorCode::OracleTooLarge, "edge weight too large for oracle");
    std::size_t a = label(e.u), b = label(e.v);
    std::uint64_t w = e.weight.low64();
    d[a * n + b] = std::min(d[a * n + b], w);
    d[b * n + a] = std::min(d[b * n + a], w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  for (std::size_t i = 1; i < n; ++i)
    if (d[i] >= kInf) throw ExploreError(ErrorCode::InvalidParameter, "graph is disconnected");

  // dp[mask][v]: cheapest walk from 0 covering mask (over vertices 1..n-1), ending at v.
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::uint64_t> dp((full + 1) * m, kInf);
  for (std::size_t v = 0; v < m; ++v) dp[(std::size_t{1} << v) * m + v] = d[v + 1];
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t v = 0; v < m; ++v) {
      std::uint64_t cur = dp[mask * m + v];
      if (cur >= kInf || !(mask & (std::size_t{1} << v))) continue;
      for (std::size_t u = 0; u < m; ++u) {
        if (mask & (std::size_t{1} << u)) continue;
        std::size_t next = mask | (std::size_t{1} << u);
        std::uint64_t cand = cur + d[(v + 1) * n + u + 1];
        if (cand < dp[next * m + u]) dp[next * m + u] = cand;
      }
    }
  }
  std::uint64_t best = kInf;
  for (std::size_t v = 0; v < m; ++v) {
    std::uint64_t c = dp[full * m + v];
    if (end_at_start) c += d[(v + 1) * n];
    best = std::min(best, c);
  }
  return Weight(best);
}

}  // namespace explore

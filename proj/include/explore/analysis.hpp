#pragma once

#include <cstdint>
#include <vector>

#include "explore/graph.hpp"
#include "explore/params.hpp"
#include "explore/rational.hpp"
#include "explore/weight.hpp"

namespace explore {

// Recursion values for indices -1..N; element i+1 holds index i.
struct FormulaTable {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t levels = 0;
  std::vector<Weight> e, t, u, v;
  Weight u_closing;  // closing-block variant of u at index N

  const Weight& e_at(int i) const { return e.at(static_cast<std::size_t>(i + 1)); }
  const Weight& t_at(int i) const { return t.at(static_cast<std::size_t>(i + 1)); }
  const Weight& u_at(int i) const { return u.at(static_cast<std::size_t>(i + 1)); }
  const Weight& v_at(int i) const { return v.at(static_cast<std::size_t>(i + 1)); }
};

FormulaTable formulas(std::uint32_t x, std::uint32_t y, std::uint32_t levels);

// Weight of inter-block edges at `level` (-1 gives the unit path weight).
Weight edge_weight(const Params& p, int level);

Weight analytic_alg_lower_bound(const Params& p);
Weight opt_formula(const Params& p);
Rational analytic_ratio(const Params& p);

// Limit of the analytic ratio as x grows, for fixed N.
Rational limit_ratio(Topology topology, std::uint32_t levels);
// Limit of the lifted-chain ratio with k = N + 2.
Rational lifted_chain_limit(std::uint32_t levels);

// Closed-form u_i, unrolled.
Weight closed_form_u(std::uint32_t x, std::uint32_t y, std::uint32_t i);
// Unrolled u_closing + 2 e_N for y = x/2 (x even).
Weight closing_sum_unrolled(std::uint32_t x, std::uint32_t levels);

// Exact optimum of a walk from `start` visiting every vertex (Held-Karp on the
// metric closure). With end_at_start the walk must return to `start`;
// otherwise it may stop anywhere. At most 18 vertices.
Weight exact_exploration_opt(const WeightedGraph& graph, VertexId start, bool end_at_start);

inline constexpr std::size_t kOracleMaxVertices = 18;

}  // namespace explore

#include "explore/engine.hpp"

#include <algorithm>

#include "explore/error.hpp"
#include "explore/log.hpp"

namespace explore {

StaticGraphWorld::StaticGraphWorld(WeightedGraph graph, VertexId origin)
    : graph_(std::move(graph)), origin_(origin), revealed_(graph_.vertex_count(), false) {
  if (!graph_.contains(origin)) throw ExploreError(ErrorCode::UnknownVertex, "origin");
  revealed_[origin] = true;
}

std::vector<Neighbor> StaticGraphWorld::observe(VertexId v) {
  if (!graph_.contains(v) || !revealed_[v]) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(v));
  std::vector<Neighbor> out = graph_.neighbors(v);
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  for (const Neighbor& nb : out) revealed_[nb.to] = true;
  return out;
}

KnowledgeView::KnowledgeView(VertexId origin) : origin_(origin), position_(origin) {}

const std::vector<Neighbor>& KnowledgeView::neighbors(VertexId v) const {
  if (!known(v)) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(v));
  return adjacency_[v];
}

void KnowledgeView::ensure(VertexId v) {
  if (v == kNoVertex) throw ExploreError(ErrorCode::WorldInconsistency, "invalid vertex id");
  if (v >= known_.size()) {
    std::size_t n = std::max<std::size_t>(v + 1, known_.size() * 3 / 2);
    known_.resize(n, 0);
    visited_.resize(n, 0);
    adjacency_.resize(n);
  }
  if (!known_[v]) {
    known_[v] = 1;
    ++known_count_;
  }
}

void KnowledgeView::absorb(VertexId v, const std::vector<Neighbor>& edges) {
  // Every edge already known at v must come back with the same weight.
  std::size_t matched = 0;
  for (const Neighbor& nb : edges) {
    if (nb.to == v) throw ExploreError(ErrorCode::WorldInconsistency, "self loop reported at " + std::to_string(v));
    ensure(nb.to);
    auto& mine = adjacency_[v];
    auto it = std::find_if(mine.begin(), mine.end(), [&](const Neighbor& n) { return n.to == nb.to; });
    if (it != mine.end()) {
      if (it->weight != nb.weight) throw ExploreError(ErrorCode::WorldInconsistency, "weight changed on known edge");
      ++matched;
      continue;
    }
    if (visited_[nb.to])
      throw ExploreError(ErrorCode::WorldInconsistency,
                         "edge " + std::to_string(v) + "-" + std::to_string(nb.to) + " missing from earlier observation");
    mine.push_back(nb);
    adjacency_[nb.to].push_back({v, nb.weight});
  }
  if (matched != adjacency_[v].size() - (edges.size() - matched))
    throw ExploreError(ErrorCode::WorldInconsistency, "observation of " + std::to_string(v) + " dropped a known edge");
  visited_[v] = 1;
  ++visited_count_;
}

RunResult Engine::run(Algorithm& algorithm, World& world, StepBudget budget) {
  const VertexId origin = world.origin();
  KnowledgeView view(origin);
  view.ensure(origin);
  view.absorb(origin, world.observe(origin));
  algorithm.reset();
  RunResult result;
  result.trace.moves.reserve(1024);

  while (view.frontier_count() > 0 || view.position_ != origin) {
    std::uint64_t limit = budget.fixed != 0 ? budget.fixed : budget.per_vertex * (view.known_count_ + 1);
    if (view.steps_ >= limit)
      throw ExploreError(ErrorCode::BudgetExceeded, std::string(algorithm.name()) + " exceeded " + std::to_string(limit) + " steps");
    VertexId next = algorithm.decide(view);
    const VertexId here = view.position_;
    const Neighbor* edge = nullptr;
    if (view.known(next))
      for (const Neighbor& nb : view.adjacency_[here])
        if (nb.to == next) {
          edge = &nb;
          break;
        }
    if (edge == nullptr)
      throw ExploreError(ErrorCode::IllegalMove, std::to_string(here) + " -> " + std::to_string(next));
    Weight w = edge->weight;
    result.trace.moves.push_back({here, next, w});
    view.cost_ += w;
    ++view.steps_;
    view.position_ = next;
    if (!view.visited_[next]) view.absorb(next, world.observe(next));
  }
  result.trace.total = view.cost_;
  result.vertices_visited = view.visited_count_;
  log_debug("run finished: " + std::to_string(view.steps_) + " steps, " + std::to_string(view.visited_count_) + " vertices");
  return result;
}

ReplayVerdict replay_validate(const Trace& trace, const WeightedGraph& graph, VertexId origin) {
  auto fail = [](std::string why) { return ReplayVerdict{false, std::move(why)}; };
  if (!graph.contains(origin)) return fail("origin not in graph");
  std::vector<bool> seen(graph.vertex_count(), false);
  seen[origin] = true;
  std::size_t count = 1;
  VertexId at = origin;
  Weight total;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    if (m.from != at) return fail("move " + std::to_string(i) + " does not start at current position");
    auto w = graph.edge_weight(m.from, m.to);
    if (!w) return fail("move " + std::to_string(i) + " uses a non-edge");
    if (*w != m.weight) return fail("move " + std::to_string(i) + " has wrong weight");
    total += m.weight;
    at = m.to;
    if (!seen[at]) {
      seen[at] = true;
      ++count;
    }
  }
  if (at != origin) return fail("walk does not end at origin");
  if (count != graph.vertex_count()) return fail("walk misses " + std::to_string(graph.vertex_count() - count) + " vertices");
  if (total != trace.total) return fail("recorded total differs from replayed cost");
  return {true, ""};
}

}  // namespace explore

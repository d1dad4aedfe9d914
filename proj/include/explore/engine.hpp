#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "explore/graph.hpp"
#include "explore/weight.hpp"

namespace explore {

// What an agent may query: the origin, and the full edge list of a vertex it
// has reached. Implementations may build the graph lazily.
class World {
 public:
  virtual ~World() = default;
  virtual VertexId origin() const = 0;
  // Edges incident to `v`, sorted by neighbor id. `v` must already be revealed
  // (the origin or a neighbor of an observed vertex).
  virtual std::vector<Neighbor> observe(VertexId v) = 0;
};

class StaticGraphWorld : public World {
 public:
  StaticGraphWorld(WeightedGraph graph, VertexId origin);
  VertexId origin() const override { return origin_; }
  std::vector<Neighbor> observe(VertexId v) override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
  VertexId origin_;
  std::vector<bool> revealed_;
};

struct Move {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  Weight weight;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Trace {
  std::vector<Move> moves;
  Weight total;
};

// Agent-side knowledge. Adjacency rows are complete for visited vertices and
// partial (edges towards visited vertices) for frontier vertices.
class KnowledgeView {
 public:
  explicit KnowledgeView(VertexId origin);

  VertexId origin() const { return origin_; }
  VertexId position() const { return position_; }
  bool known(VertexId v) const { return v < known_.size() && known_[v]; }
  bool visited(VertexId v) const { return v < visited_.size() && visited_[v]; }
  const std::vector<Neighbor>& neighbors(VertexId v) const;
  const Adjacency& adjacency() const { return adjacency_; }
  std::size_t known_count() const { return known_count_; }
  std::size_t visited_count() const { return visited_count_; }
  std::size_t frontier_count() const { return known_count_ - visited_count_; }
  const Weight& cost() const { return cost_; }
  std::uint64_t steps() const { return steps_; }

 private:
  friend class Engine;
  void ensure(VertexId v);
  void absorb(VertexId v, const std::vector<Neighbor>& edges);

  VertexId origin_;
  VertexId position_;
  std::vector<std::uint8_t> known_, visited_;
  Adjacency adjacency_;
  std::size_t known_count_ = 0;
  std::size_t visited_count_ = 0;
  Weight cost_;
  std::uint64_t steps_ = 0;
};

class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string_view name() const = 0;
  virtual void reset() = 0;
  // Next vertex, adjacent to view.position() through a known edge.
  virtual VertexId decide(const KnowledgeView& view) = 0;
};

struct StepBudget {
  std::uint64_t per_vertex = 64;  // budget = per_vertex * (revealed + 1)
  std::uint64_t fixed = 0;        // nonzero overrides the dynamic budget
};

struct RunResult {
  Trace trace;
  std::size_t vertices_visited = 0;
};

class Engine {
 public:
  static RunResult run(Algorithm& algorithm, World& world, StepBudget budget = {});
};

inline RunResult run(Algorithm& algorithm, World& world, StepBudget budget = {}) {
  return Engine::run(algorithm, world, budget);
}

// Checks that `trace` is a closed walk from `origin` over edges of `graph`
// with matching weights that visits every vertex, and that its total matches.
struct ReplayVerdict {
  bool ok = false;
  std::string reason;
};
ReplayVerdict replay_validate(const Trace& trace, const WeightedGraph& graph, VertexId origin);

}  // namespace explore

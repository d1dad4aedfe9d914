#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "explore/weight.hpp"

namespace explore {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Neighbor {
  VertexId to = kNoVertex;
  Weight weight;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Weight weight;
};

using Adjacency = std::vector<std::vector<Neighbor>>;

// Undirected simple graph on dense ids 0..n-1.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t vertices) : adjacency_(vertices) {}

  VertexId add_vertex();
  std::size_t add_edge(VertexId u, VertexId v, Weight weight);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(VertexId v) const { return v < adjacency_.size(); }
  const std::vector<Neighbor>& neighbors(VertexId v) const;
  const Adjacency& adjacency() const { return adjacency_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Weight> edge_weight(VertexId u, VertexId v) const;
  Weight total_weight() const;

 private:
  Adjacency adjacency_;
  std::vector<Edge> edges_;
};

struct PathResult {
  Weight cost;
  std::vector<VertexId> vertices;  // from .. to inclusive
};

// Minimum-cost path; among those the fewest edges, then the lexicographically
// smallest vertex sequence. `allowed`, when given, restricts interior and end
// vertices (the source is always allowed).
std::optional<PathResult> shortest_path(const WeightedGraph& graph, VertexId from, VertexId to,
                                        const std::vector<bool>* allowed = nullptr);

std::size_t distinct_weight_count(const WeightedGraph& graph);

// Copy of `graph` with every zero weight raised to one.
WeightedGraph weight_lift(const WeightedGraph& graph);

WeightedGraph induced_subgraph(const WeightedGraph& graph, const std::vector<VertexId>& keep,
                               std::vector<VertexId>* old_ids = nullptr);

struct DotOptions {
  std::size_t max_vertices = 5000;
  std::string name = "G";
};

// Graphviz text. Graphs above the cap produce a one-node summary instead.
std::string export_dot(const WeightedGraph& graph, const std::map<VertexId, std::string>& annotations = {},
                       const DotOptions& options = {});

}  // namespace explore

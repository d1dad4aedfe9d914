#include "explore/graph.hpp"

#include <set>
#include <sstream>

#include "explore/error.hpp"
#include "explore/path_search.hpp"

namespace explore {

VertexId WeightedGraph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

std::size_t WeightedGraph::add_edge(VertexId u, VertexId v, Weight weight) {
  if (!contains(u) || !contains(v))
    throw ExploreError(ErrorCode::UnknownVertex, "edge endpoint out of range");
  if (u == v) throw ExploreError(ErrorCode::SelfLoop, "self loop at " + std::to_string(u));
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const Neighbor& nb : shorter)
    if (nb.to == other)
      throw ExploreError(ErrorCode::DuplicateEdge, std::to_string(u) + "-" + std::to_string(v));
  adjacency_[u].push_back({v, weight});
  adjacency_[v].push_back({u, weight});
  edges_.push_back({u, v, weight});
  return edges_.size() - 1;
}

const std::vector<Neighbor>& WeightedGraph::neighbors(VertexId v) const {
  if (!contains(v)) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(v));
  return adjacency_[v];
}

std::optional<Weight> WeightedGraph::edge_weight(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  for (const Neighbor& nb : adjacency_[u])
    if (nb.to == v) return nb.weight;
  return std::nullopt;
}

Weight WeightedGraph::total_weight() const {
  Weight sum;
  for (const Edge& e : edges_) sum += e.weight;
  return sum;
}

std::optional<PathResult> shortest_path(const WeightedGraph& graph, VertexId from, VertexId to,
                                        const std::vector<bool>* allowed) {
  if (!graph.contains(from) || !graph.contains(to)) throw ExploreError(ErrorCode::UnknownVertex, "shortest_path");
  PathSearch search;
  auto ok = [&](VertexId v) { return allowed == nullptr || (*allowed)[v]; };
  if (!ok(to)) return std::nullopt;
  return search.nearest(graph.adjacency(), from, [&](VertexId v) { return v == to; }, ok);
}

std::size_t distinct_weight_count(const WeightedGraph& graph) {
  std::set<Weight> seen;
  for (const Edge& e : graph.edges()) seen.insert(e.weight);
  return seen.size();
}

WeightedGraph weight_lift(const WeightedGraph& graph) {
  WeightedGraph out(graph.vertex_count());
  for (const Edge& e : graph.edges()) out.add_edge(e.u, e.v, e.weight.is_zero() ? Weight(1) : e.weight);
  return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& graph, const std::vector<VertexId>& keep,
                               std::vector<VertexId>* old_ids) {
  std::vector<VertexId> remap(graph.vertex_count(), kNoVertex);
  WeightedGraph out;
  for (VertexId v : keep) {
    if (!graph.contains(v)) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(v));
    if (remap[v] == kNoVertex) remap[v] = out.add_vertex();
  }
  for (const Edge& e : graph.edges())
    if (remap[e.u] != kNoVertex && remap[e.v] != kNoVertex) out.add_edge(remap[e.u], remap[e.v], e.weight);
  if (old_ids != nullptr) {
    old_ids->assign(out.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < remap.size(); ++v)
      if (remap[v] != kNoVertex) (*old_ids)[remap[v]] = v;
  }
  return out;
}

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace

std::string export_dot(const WeightedGraph& graph, const std::map<VertexId, std::string>& annotations,
                       const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << options.name << " {\n";
  if (graph.vertex_count() > options.max_vertices) {
    os << "  summary [label=" << quoted("vertices=" + std::to_string(graph.vertex_count()) +
                                        " edges=" + std::to_string(graph.edge_count()))
       << "];\n}\n";
    return os.str();
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    os << "  " << v;
    if (auto it = annotations.find(v); it != annotations.end()) os << " [label=" << quoted(std::to_string(v) + ":" + it->second) << "]";
    os << ";\n";
  }
  for (const Edge& e : graph.edges()) os << "  " << e.u << " -- " << e.v << " [label=" << quoted(e.weight.to_string()) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace explore

#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "explore/graph.hpp"

namespace explore {

// Reusable Dijkstra workspace keyed by (cost, hops, id). Arrays persist
// between searches and are invalidated by a generation stamp, so a search
// costs only what it touches.
class PathSearch {
 public:
  // Finds the cheapest vertex satisfying `is_target` (ties: smallest id) and
  // the canonical path to it: fewest hops, then lexicographically smallest.
  template <class IsTarget, class Allowed>
  std::optional<PathResult> nearest(const Adjacency& adj, VertexId source, IsTarget is_target, Allowed allowed) {
    begin(adj.size());
    touch(source, Weight(0), 0);
    Heap heap;
    heap.emplace(Weight(0), 0u, source);
    std::optional<Weight> best;
    VertexId target = kNoVertex;
    while (!heap.empty()) {
      auto [d, h, u] = heap.top();
      heap.pop();
      if (settled_[u] == gen_) continue;
      if (d != dist_[u] || h != hops_[u]) continue;
      if (best && d > *best) break;
      settled_[u] = gen_;
      if (is_target(u)) {
        if (!best) best = d;
        if (target == kNoVertex || u < target) target = u;
      }
      for (const Neighbor& nb : adj[u]) {
        VertexId v = nb.to;
        if (settled_[v] == gen_ || !allowed(v)) continue;
        Weight nd = d + nb.weight;
        std::uint32_t nh = h + 1;
        if (seen_[v] != gen_ || std::tie(nd, nh) < std::tie(dist_[v], hops_[v])) {
          touch(v, nd, nh);
          heap.emplace(nd, nh, v);
        }
      }
    }
    if (target == kNoVertex) return std::nullopt;
    return extract(adj, source, target);
  }

 private:
  using Entry = std::tuple<Weight, std::uint32_t, VertexId>;
  using Heap = std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>>;

  void begin(std::size_t n) {
    if (dist_.size() < n) {
      dist_.resize(n);
      hops_.resize(n);
      seen_.resize(n, 0);
      settled_.resize(n, 0);
      mark_.resize(n, 0);
    }
    if (++gen_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      std::fill(settled_.begin(), settled_.end(), 0);
      std::fill(mark_.begin(), mark_.end(), 0);
      gen_ = 1;
    }
  }
  void touch(VertexId v, Weight d, std::uint32_t h) {
    seen_[v] = gen_;
    dist_[v] = d;
    hops_[v] = h;
  }
  bool on_dag(VertexId from, VertexId to, const Weight& w) const {
    return settled_[from] == gen_ && settled_[to] == gen_ && hops_[from] + 1 == hops_[to] &&
           dist_[from] + w == dist_[to];
  }

  PathResult extract(const Adjacency& adj, VertexId source, VertexId target) {
    // Mark every vertex that lies on some optimal path to the target.
    std::vector<VertexId> stack{target};
    mark_[target] = gen_;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adj[u]) {
        if (mark_[nb.to] != gen_ && on_dag(nb.to, u, nb.weight)) {
          mark_[nb.to] = gen_;
          stack.push_back(nb.to);
        }
      }
    }
    PathResult out{dist_[target], {source}};
    VertexId cur = source;
    while (cur != target) {
      VertexId next = kNoVertex;
      for (const Neighbor& nb : adj[cur])
        if (mark_[nb.to] == gen_ && nb.to < next && on_dag(cur, nb.to, nb.weight)) next = nb.to;
      cur = next;
      out.vertices.push_back(cur);
    }
    return out;
  }

  std::vector<Weight> dist_;
  std::vector<std::uint32_t> hops_;
  std::vector<std::uint32_t> seen_, settled_, mark_;
  std::uint32_t gen_ = 0;
};

}  // namespace explore

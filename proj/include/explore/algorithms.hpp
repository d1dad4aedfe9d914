#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "explore/engine.hpp"
#include "explore/path_search.hpp"

namespace explore {

// Travels a canonical shortest known path to the cheapest unvisited vertex
// (ties: smallest id), then home once nothing is left.
class NearestNeighbor final : public Algorithm {
 public:
  std::string_view name() const override { return "nearest_neighbor"; }
  void reset() override;
  VertexId decide(const KnowledgeView& view) override;

 private:
  PathSearch search_;
  std::vector<VertexId> plan_;
  std::size_t cursor_ = 0;
  std::size_t planned_at_ = 0;  // visited count when plan_ was made
};

// Takes the cheapest (then smallest-id) edge to an unvisited vertex, else
// backs up one tree edge.
class DepthFirst final : public Algorithm {
 public:
  std::string_view name() const override { return "dfs"; }
  void reset() override { stack_.clear(); }
  VertexId decide(const KnowledgeView& view) override;

 private:
  std::vector<VertexId> stack_;
};

std::vector<std::string> algorithm_names();
// Accepts canonical names and the alias "nn".
std::unique_ptr<Algorithm> make_algorithm(std::string_view name);

}  // namespace explore

#include "explore/algorithms.hpp"

#include "explore/error.hpp"

namespace explore {

void NearestNeighbor::reset() {
  plan_.clear();
  cursor_ = 0;
  planned_at_ = 0;
}

VertexId NearestNeighbor::decide(const KnowledgeView& view) {
  const VertexId here = view.position();
  bool fresh = planned_at_ == view.visited_count() && cursor_ < plan_.size() && cursor_ > 0 &&
               plan_[cursor_ - 1] == here;
  if (!fresh) {
    auto all = [](VertexId) { return true; };
    std::optional<PathResult> path;
    if (view.frontier_count() > 0)
      path = search_.nearest(view.adjacency(), here, [&](VertexId v) { return !view.visited(v); }, all);
    else
      path = search_.nearest(view.adjacency(), here, [&](VertexId v) { return v == view.origin(); }, all);
    if (!path || path->vertices.size() < 2)
      throw ExploreError(ErrorCode::IllegalMove, "nearest_neighbor found no target from " + std::to_string(here));
    plan_ = std::move(path->vertices);
    cursor_ = 1;
    planned_at_ = view.visited_count();
  }
  return plan_[cursor_++];
}

VertexId DepthFirst::decide(const KnowledgeView& view) {
  if (stack_.empty()) stack_.push_back(view.origin());
  const VertexId here = view.position();
  if (stack_.back() != here) throw ExploreError(ErrorCode::IllegalMove, "dfs lost track of its position");
  const Neighbor* best = nullptr;
  for (const Neighbor& nb : view.neighbors(here)) {
    if (view.visited(nb.to)) continue;
    if (best == nullptr || nb.weight < best->weight || (nb.weight == best->weight && nb.to < best->to)) best = &nb;
  }
  if (best != nullptr) {
    stack_.push_back(best->to);
    return best->to;
  }
  if (stack_.size() < 2) throw ExploreError(ErrorCode::IllegalMove, "dfs has nowhere to go");
  stack_.pop_back();
  return stack_.back();
}

std::vector<std::string> algorithm_names() { return {"nearest_neighbor", "dfs"}; }

std::unique_ptr<Algorithm> make_algorithm(std::string_view name) {
  if (name == "nearest_neighbor" || name == "nn") return std::make_unique<NearestNeighbor>();
  if (name == "dfs") return std::make_unique<DepthFirst>();
  throw ExploreError(ErrorCode::InvalidParameter, "unknown algorithm '" + std::string(name) + "'");
}

}  // namespace explore

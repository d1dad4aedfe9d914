#include <doctest.h>

#include "printers.hpp"

#include <random>
#include <set>

#include "explore/algorithms.hpp"
#include "explore/engine.hpp"
#include "explore/error.hpp"

using namespace explore;

namespace {

WeightedGraph path3() {
  WeightedGraph g(3);
  g.add_edge(0, 1, Weight(1));
  g.add_edge(1, 2, Weight(1));
  return g;
}

WeightedGraph random_connected(std::mt19937& rng, std::size_t n, std::size_t extra, std::uint64_t max_w) {
  WeightedGraph g(n);
  std::uniform_int_distribution<std::uint64_t> weight(0, max_w);
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> parent(0, v - 1);
    g.add_edge(parent(rng), v, Weight(weight(rng)));
  }
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(n - 1));
  for (std::size_t i = 0; i < extra; ++i) {
    VertexId a = any(rng), b = any(rng);
    if (a != b && !g.edge_weight(a, b)) g.add_edge(a, b, Weight(weight(rng)));
  }
  return g;
}

WeightedGraph scaled(const WeightedGraph& g, std::uint64_t factor) {
  WeightedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.weight * Weight(factor));
  return out;
}

std::vector<VertexId> visit_order(const Trace& t) {
  std::vector<VertexId> out;
  std::set<VertexId> seen;
  for (const Move& m : t.moves)
    if (seen.insert(m.to).second) out.push_back(m.to);
  return out;
}

class Scripted final : public Algorithm {
 public:
  explicit Scripted(std::vector<VertexId> moves) : moves_(std::move(moves)) {}
  std::string_view name() const override { return "scripted"; }
  void reset() override { at_ = 0; }
  VertexId decide(const KnowledgeView&) override { return moves_[at_++ % moves_.size()]; }

 private:
  std::vector<VertexId> moves_;
  std::size_t at_ = 0;
};

// Wraps another algorithm and checks view invariants at every step.
class Watcher final : public Algorithm {
 public:
  explicit Watcher(std::unique_ptr<Algorithm> inner) : inner_(std::move(inner)) {}
  std::string_view name() const override { return "watcher"; }
  void reset() override {
    inner_->reset();
    known_ = visited_ = 0;
  }
  VertexId decide(const KnowledgeView& view) override {
    CHECK(view.known_count() >= known_);
    CHECK(view.visited_count() >= visited_);
    CHECK(view.visited(view.position()));
    CHECK(view.visited(view.origin()));
    known_ = view.known_count();
    visited_ = view.visited_count();
    return inner_->decide(view);
  }

 private:
  std::unique_ptr<Algorithm> inner_;
  std::size_t known_ = 0, visited_ = 0;
};

}  // namespace

TEST_CASE("single vertex world ends immediately") {
  for (const auto& name : algorithm_names()) {
    StaticGraphWorld world(WeightedGraph(1), 0);
    auto alg = make_algorithm(name);
    RunResult r = run(*alg, world);
    CHECK(r.trace.moves.empty());
    CHECK(r.trace.total == Weight(0));
  }
}

TEST_CASE("two vertex world costs out and back") {
  for (const auto& name : algorithm_names()) {
    WeightedGraph g(2);
    g.add_edge(0, 1, Weight(5));
    StaticGraphWorld world(g, 0);
    auto alg = make_algorithm(name);
    CHECK(run(*alg, world).trace.total == Weight(10));
  }
}

TEST_CASE("registry") {
  auto names = algorithm_names();
  CHECK(names.size() == 2);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(make_algorithm("nn")->name() == "nearest_neighbor");
  CHECK_THROWS_AS(make_algorithm("blocking"), ExploreError);
}

TEST_CASE("dfs on small shapes") {
  WeightedGraph star(4);
  for (VertexId v = 1; v < 4; ++v) star.add_edge(0, v, Weight(1));
  StaticGraphWorld star_world(star, 0);
  DepthFirst dfs;
  CHECK(run(dfs, star_world).trace.total == Weight(6));

  StaticGraphWorld path_world(path3(), 0);
  RunResult r = run(dfs, path_world);
  CHECK(r.trace.total == Weight(4));
  std::vector<VertexId> walk;
  for (const Move& m : r.trace.moves) walk.push_back(m.to);
  CHECK(walk == std::vector<VertexId>{1, 2, 1, 0});
}

TEST_CASE("nearest neighbor picks the cheapest frontier vertex") {
  WeightedGraph g(3);
  g.add_edge(0, 1, Weight(3));
  g.add_edge(0, 2, Weight(2));
  StaticGraphWorld world(g, 0);
  NearestNeighbor nn;
  RunResult r = run(nn, world);
  REQUIRE(!r.trace.moves.empty());
  CHECK(r.trace.moves.front().to == 2);

  WeightedGraph tie(8);
  tie.add_edge(0, 7, Weight(2));
  tie.add_edge(0, 4, Weight(2));
  for (VertexId v : {1u, 2u, 3u, 5u, 6u}) tie.add_edge(4, v, Weight(10));
  StaticGraphWorld tie_world(tie, 0);
  CHECK(run(nn, tie_world).trace.moves.front().to == 4);
}

TEST_CASE("nearest neighbor is invariant under weight scaling") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    WeightedGraph g = random_connected(rng, 30, 40, 9);
    NearestNeighbor nn;
    StaticGraphWorld a(g, 0), b(scaled(g, 7), 0);
    Trace ta = run(nn, a).trace, tb = run(nn, b).trace;
    CHECK(visit_order(ta) == visit_order(tb));
    CHECK(tb.total == ta.total * Weight(7));
  }
}

TEST_CASE("traces replay and conserve cost") {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    WeightedGraph g = random_connected(rng, 40, 30, 5);
    for (const auto& name : algorithm_names()) {
      StaticGraphWorld world(g, 0);
      Watcher alg(make_algorithm(name));
      RunResult r = run(alg, world);
      CHECK(r.vertices_visited == g.vertex_count());
      Weight sum;
      for (const Move& m : r.trace.moves) sum += m.weight;
      CHECK(sum == r.trace.total);
      CHECK(replay_validate(r.trace, g, 0).ok);
    }
  }
}

TEST_CASE("replay rejects tampered traces") {
  WeightedGraph g = path3();
  StaticGraphWorld world(g, 0);
  DepthFirst dfs;
  Trace t = run(dfs, world).trace;
  REQUIRE(replay_validate(t, g, 0).ok);

  Trace heavier = t;
  heavier.moves[0].weight = heavier.moves[0].weight + Weight(1);
  heavier.total = heavier.total + Weight(1);
  CHECK_FALSE(replay_validate(heavier, g, 0).ok);

  Trace short_walk = t;
  short_walk.total = short_walk.total - short_walk.moves.back().weight;
  short_walk.moves.pop_back();
  ReplayVerdict v = replay_validate(short_walk, g, 0);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.find("origin") != std::string::npos);
}

TEST_CASE("engine rejects illegal moves and endless walks") {
  StaticGraphWorld world(path3(), 0);
  Scripted jump({2});
  CHECK_THROWS_WITH_AS(run(jump, world), doctest::Contains("IllegalMove"), ExploreError);

  StaticGraphWorld world2(path3(), 0);
  Scripted shuttle({1, 0});
  try {
    run(shuttle, world2);
    FAIL("expected budget error");
  } catch (const ExploreError& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("static world observe is repeatable") {
  StaticGraphWorld world(path3(), 0);
  world.observe(0);
  auto first = world.observe(1);
  CHECK(world.observe(1) == first);
  CHECK(first.size() == 2);
  CHECK_THROWS_AS(world.observe(7), ExploreError);
}

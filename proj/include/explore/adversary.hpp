#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "explore/engine.hpp"
#include "explore/graph.hpp"
#include "explore/params.hpp"

namespace explore {

enum class EdgeKind : std::uint8_t { Unresolved, Path, Zero, Exit, Skip, Backbone, Return };
enum class VertexRole : std::uint8_t { Placeholder, Path, Tail, Joint, Head, PseudoStart, Tail2, OriginHead, Connection };
enum class BlockKind : std::uint8_t { Pending, Normal, Final, Origin, Closing };

std::string_view to_string(EdgeKind k);
std::string_view to_string(VertexRole r);
std::string_view to_string(BlockKind k);

// One adversary decision, in the order it was taken. `step` counts the
// observations answered before the decision.
struct Decision {
  enum class Kind : std::uint8_t { BlockCreated, KindChosen, LayoutFixed, OrientationFixed, SlotBound, Linked, ConnectionCreated, Observed };
  std::uint64_t step = 0;
  Kind kind = Kind::BlockCreated;
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};

class ResolutionLog {
 public:
  void add(Decision d) { entries_.push_back(d); }
  const std::vector<Decision>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // One JSON object per line.
  std::string to_jsonl() const;

 private:
  std::vector<Decision> entries_;
};

struct BlockSummary {
  int id = -1;
  int level = 0;
  BlockKind kind = BlockKind::Pending;
  int parent = -1;
  int offset = 0;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;  // head vertex, exit vertex for final blocks, pseudo-start side for closings
};

// Fully resolved world: the graph plus the structure the adversary built.
struct FinalWorld {
  Params params;
  bool lifted = false;
  VertexId origin = kNoVertex;
  WeightedGraph graph;
  std::vector<EdgeKind> edge_kinds;  // parallel to graph.edges()
  std::vector<VertexRole> roles;
  std::vector<int> vertex_block;     // -1 for connection vertices
  std::vector<BlockSummary> blocks;

  // All vertices of `block` and its sub-blocks.
  std::vector<VertexId> block_vertices(int block) const;
  std::map<VertexId, std::string> annotations() const;
};

// Adaptive lower-bound world. Vertices and edges are created only when an
// observation needs them, and every answer is final. The construction is a
// function of the observation order alone.
class AdversaryWorld final : public World {
 public:
  explicit AdversaryWorld(const Params& params, bool lift_zero_weights = false);
  ~AdversaryWorld() override;
  AdversaryWorld(const AdversaryWorld&) = delete;
  AdversaryWorld& operator=(const AdversaryWorld&) = delete;

  VertexId origin() const override;
  std::vector<Neighbor> observe(VertexId v) override;

  // Resolves every outstanding vertex and returns the completed graph. The
  // world stays usable; later observations see the same graph.
  FinalWorld finalize();

  const ResolutionLog& log() const;
  const Params& params() const;
  std::size_t vertex_count() const;
  std::size_t observation_count() const;
  // Hash over (vertex, answer) for every observation, in order.
  std::uint64_t transcript_hash() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Tour {
  std::vector<VertexId> walk;  // closed, starts and ends at the origin
  Weight cost;
};

// Euler circuit of the structural subgraph (every edge except skip and return
// edges). For the simple and recursive worlds this is the Hamiltonian cycle
// through all blocks.
Tour explicit_opt_tour(const FinalWorld& world);
Trace tour_as_trace(const Tour& tour, const WeightedGraph& graph);

}  // namespace explore

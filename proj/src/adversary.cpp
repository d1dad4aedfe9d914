#include "explore/adversary.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "explore/analysis.hpp"
#include "explore/error.hpp"

namespace explore {

std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Unresolved: return "unresolved";
    case EdgeKind::Path: return "path";
    case EdgeKind::Zero: return "zero";
    case EdgeKind::Exit: return "exit";
    case EdgeKind::Skip: return "skip";
    case EdgeKind::Backbone: return "backbone";
    case EdgeKind::Return: return "return";
  }
  return "?";
}

std::string_view to_string(VertexRole r) {
  switch (r) {
    case VertexRole::Placeholder: return "placeholder";
    case VertexRole::Path: return "path";
    case VertexRole::Tail: return "tail";
    case VertexRole::Joint: return "joint";
    case VertexRole::Head: return "head";
    case VertexRole::PseudoStart: return "pseudo_start";
    case VertexRole::Tail2: return "tail2";
    case VertexRole::OriginHead: return "origin_head";
    case VertexRole::Connection: return "connection";
  }
  return "?";
}

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Pending: return "pending";
    case BlockKind::Normal: return "normal";
    case BlockKind::Final: return "final";
    case BlockKind::Origin: return "origin";
    case BlockKind::Closing: return "closing";
  }
  return "?";
}

namespace {

constexpr int kNone = -1;
constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

enum class SlotRole : std::uint8_t { Unbound, Return, Skip, Backbone };
enum class GroupKind : std::uint8_t { Head, OriginEnd, Connection };
enum class Side : std::uint8_t { Main, Second };

std::string_view slot_role_name(SlotRole r) {
  switch (r) {
    case SlotRole::Unbound: return "unbound";
    case SlotRole::Return: return "return";
    case SlotRole::Skip: return "skip";
    case SlotRole::Backbone: return "backbone";
  }
  return "?";
}

EdgeKind edge_kind_of(SlotRole r) {
  switch (r) {
    case SlotRole::Return: return EdgeKind::Return;
    case SlotRole::Skip: return EdgeKind::Skip;
    case SlotRole::Backbone: return EdgeKind::Backbone;
    default: return EdgeKind::Unresolved;
  }
}

struct Slot {
  VertexId far = kNoVertex;
  SlotRole role = SlotRole::Unbound;
  std::int8_t pair = -1;
};

// Edges of equal weight leaving one vertex whose far ends are assigned lazily.
struct SlotGroup {
  GroupKind kind = GroupKind::Head;
  int level = 0;
  int ref = kNone;  // block for Head/OriginEnd, connection index otherwise
  int side = 0;     // OriginEnd only
  int size = 0;
  VertexId owner = kNoVertex;
  std::array<Slot, 6> slots{};
  std::array<int, 3> link{kNone, kNone, kNone};
};

// A connector pair (skip + backbone) joined to the entry side of a block.
struct Link {
  int group = kNone;
  int pair = 0;
  int block = kNone;
  Side side = Side::Main;
};

struct VertexInfo {
  VertexRole role = VertexRole::Placeholder;
  bool complete = false;
  bool revealed = false;
  int block = kNone;  // group index for placeholders, connection for connection vertices
  int index = 0;      // path offset, slot index or origin side
};

struct EdgeRec {
  VertexId u, v;
  Weight weight;
  EdgeKind kind;
};

struct Block {
  int level = 0;
  BlockKind kind = BlockKind::Pending;
  int parent = kNone;
  int offset = 0;
  int cycle = kNone;
  int lane = kNone;
  int lane_index = kNone;
  bool committed = false;
  bool orient_pending = false;
  int tail_end = 0;
  int head_end = 0;
  bool any = false;
  int lo = 0, hi = 0;
  int explored = 0;
  int examined = 0;
  VertexId tail = kNoVertex, joint = kNoVertex, head = kNoVertex, pseudo = kNoVertex, tail2 = kNoVertex;
  std::array<VertexId, 2> origin_head{kNoVertex, kNoVertex};
  int head_group = kNone;
  std::array<int, 2> origin_group{kNone, kNone};
  int main_link = kNone;
  int second_link = kNone;
  int connection = kNone;
  int span = 0;
  std::vector<std::uint32_t> items;  // path vertex or unit block per offset
};

struct Lane {
  std::vector<int> units;
  int normals = 0;
};

struct Cycle {
  bool last = false;
  int anchor_connection = kNone;  // kNone for the first cycle (anchored at the origin block)
  int next_connection = kNone;
  std::array<Lane, 3> lanes;      // two sides and the continuation lane
  int upper = kNone;
  int total = 0;
  bool closed = false;
};

struct Connection {
  int group = kNone;
  int cycle = kNone;  // the cycle it anchors
  int final_block = kNone;
  VertexId vertex = kNoVertex;
};

int sign(int v) { return v > 0 ? 1 : -1; }

}  // namespace

std::string ResolutionLog::to_jsonl() const {
  std::ostringstream os;
  for (const Decision& d : entries_) {
    os << "{\"step\":" << d.step << ",";
    switch (d.kind) {
      case Decision::Kind::BlockCreated:
        os << "\"decision\":\"block_created\",\"block\":" << d.a << ",\"parent\":" << d.b << ",\"offset\":" << d.c
           << ",\"level\":" << d.d;
        break;
      case Decision::Kind::KindChosen:
        os << "\"decision\":\"kind_chosen\",\"block\":" << d.a << ",\"kind\":\""
           << to_string(static_cast<BlockKind>(d.b)) << "\"";
        break;
      case Decision::Kind::LayoutFixed:
        os << "\"decision\":\"layout_fixed\",\"block\":" << d.a << ",\"tail\":" << d.b << ",\"head\":" << d.c
           << ",\"orientation_open\":" << (d.d != 0 ? "true" : "false");
        break;
      case Decision::Kind::OrientationFixed:
        os << "\"decision\":\"orientation_fixed\",\"block\":" << d.a << ",\"tail\":" << d.b << ",\"head\":" << d.c;
        break;
      case Decision::Kind::SlotBound:
        os << "\"decision\":\"slot_bound\",\"group\":" << d.a << ",\"slot\":" << d.b << ",\"role\":\""
           << slot_role_name(static_cast<SlotRole>(d.c)) << "\",\"pair\":" << d.d;
        break;
      case Decision::Kind::Linked:
        os << "\"decision\":\"linked\",\"group\":" << d.a << ",\"pair\":" << d.b << ",\"block\":" << d.c
           << ",\"side\":\"" << (d.d == 0 ? "main" : "second") << "\"";
        break;
      case Decision::Kind::ConnectionCreated:
        os << "\"decision\":\"connection_created\",\"connection\":" << d.a << ",\"cycle\":" << d.b
           << ",\"final_block\":" << d.c;
        break;
      case Decision::Kind::Observed:
        os << "\"decision\":\"observed\",\"vertex\":" << d.a << ",\"degree\":" << d.b;
        break;
    }
    os << "}\n";
  }
  return os.str();
}

struct AdversaryWorld::Impl {
  Params params;
  bool lift = false;
  int top = 0;  // level of top blocks
  int x = 0;
  int y = 0;
  int path_len = 0;  // vertices in a level-0 path
  int unit_len = 0;  // units in a higher block
  std::vector<Weight> level_weight;  // index level + 1

  std::vector<VertexInfo> vertices;
  std::vector<std::vector<std::uint32_t>> incident;
  std::vector<EdgeRec> edges;
  std::vector<Block> blocks;
  std::vector<SlotGroup> groups;
  std::vector<Link> links;
  std::vector<Cycle> cycles;
  std::vector<Connection> connections;
  std::vector<VertexId> pending;
  ResolutionLog log;
  std::uint64_t observations = 0;
  std::uint64_t hash = 1469598103934665603ull;
  int top_origin = kNone;
  VertexId origin = kNoVertex;

  explicit Impl(const Params& p, bool lifted) : params(p), lift(lifted) {
    top = static_cast<int>(p.top_level());
    x = static_cast<int>(p.x);
    y = static_cast<int>(p.y);
    path_len = p.topology == Topology::Simple ? x + 1 : x + 3;
    unit_len = x + 3;
    FormulaTable f = formulas(p.x, p.y, p.top_level());
    level_weight = f.e;
    Cycle first;
    first.last = p.topology != Topology::Chain;
    cycles.push_back(first);
    top_origin = new_block(top, BlockKind::Origin, kNone, 0);
    origin = entry_vertex(top_origin);
    reveal(origin);
  }

  // ---- primitives ---------------------------------------------------------

  [[noreturn]] void fail(const std::string& what) const {
    throw ExploreError(ErrorCode::WorldInconsistency, "adversary: " + what);
  }

  void note(Decision::Kind kind, std::int64_t a, std::int64_t b = 0, std::int64_t c = 0, std::int64_t d = 0) {
    log.add(Decision{observations, kind, a, b, c, d});
  }

  Weight weight_at(int level) const {
    const Weight& w = level_weight.at(static_cast<std::size_t>(level + 1));
    return w;
  }
  Weight zero() const { return lift ? Weight(1) : Weight(0); }

  VertexId new_vertex(VertexRole role, int block, int index) {
    vertices.push_back(VertexInfo{role, false, false, block, index});
    incident.emplace_back();
    if (vertices.size() >= kNoVertex) fail("vertex id space exhausted");
    return static_cast<VertexId>(vertices.size() - 1);
  }

  void retag(VertexId v, VertexRole role, int block, int index) {
    VertexInfo& info = vertices[v];
    if (info.role == VertexRole::Placeholder) {
      if (info.complete) fail("retagging a completed placeholder");
      info.role = role;
      info.block = block;
      info.index = index;
    } else if (info.role != role || info.block != block || info.index != index) {
      fail("slot target already carries another role");
    }
  }

  void reveal(VertexId v) {
    if (!vertices[v].revealed) {
      vertices[v].revealed = true;
      pending.push_back(v);
    }
  }

  void connect(VertexId a, VertexId b, Weight w, EdgeKind kind) {
    if (a == b) fail("self loop");
    for (std::uint32_t id : incident[a]) {
      EdgeRec& e = edges[id];
      if (e.u == b || e.v == b) {
        if (e.weight != w) fail("edge re-added with another weight");
        if (e.kind == EdgeKind::Unresolved) e.kind = kind;
        return;
      }
    }
    if (vertices[a].complete || vertices[b].complete)
      fail("new edge " + std::to_string(a) + "-" + std::to_string(b) + " at a completed vertex");
    edges.push_back(EdgeRec{a, b, w, kind});
    auto id = static_cast<std::uint32_t>(edges.size() - 1);
    incident[a].push_back(id);
    incident[b].push_back(id);
    reveal(b);
  }

  // ---- blocks --------------------------------------------------------------

  int len_of(const Block& b) const { return b.level == 0 ? path_len : unit_len; }
  int left_of(const Block& b) const { return (len_of(b) - 1) / 2; }
  int right_of(const Block& b) const { return len_of(b) - 1 - left_of(b); }

  int new_block(int level, BlockKind kind, int parent, int offset) {
    Block b;
    b.level = level;
    b.kind = kind;
    b.parent = parent;
    b.offset = offset;
    if (kind == BlockKind::Origin) b.committed = true;
    blocks.push_back(std::move(b));
    int id = static_cast<int>(blocks.size() - 1);
    note(Decision::Kind::BlockCreated, id, parent, offset, level);
    return id;
  }

  std::uint32_t& item(int block, int offset) {
    Block& b = blocks[block];
    if (b.items.empty()) {
      b.span = len_of(b);
      b.items.assign(static_cast<std::size_t>(2 * b.span + 1), kEmpty);
    }
    if (offset < -b.span || offset > b.span) fail("offset outside block");
    return b.items[static_cast<std::size_t>(offset + b.span)];
  }
  std::uint32_t peek(int block, int offset) {
    const Block& b = blocks[block];
    if (b.items.empty() || offset < -b.span || offset > b.span) return kEmpty;
    return b.items[static_cast<std::size_t>(offset + b.span)];
  }
  void mark_created(int block, int offset) {
    Block& b = blocks[block];
    if (!b.any) {
      b.any = true;
      b.lo = b.hi = offset;
    } else {
      b.lo = std::min(b.lo, offset);
      b.hi = std::max(b.hi, offset);
    }
  }

  int unit(int parent, int offset) {
    if (std::uint32_t u = peek(parent, offset); u != kEmpty) return static_cast<int>(u);
    const Block& p = blocks[parent];
    if (p.level == 0) fail("units requested from a level-0 block");
    BlockKind kind = BlockKind::Pending;
    if (offset == 0) {
      kind = BlockKind::Origin;
    } else if (p.kind == BlockKind::Origin) {
      if (offset < -left_of(p) || offset > right_of(p)) fail("unit outside origin block");
      kind = (offset == -left_of(p) || offset == right_of(p)) ? BlockKind::Final : BlockKind::Normal;
    } else if (p.committed) {
      int lo = std::min(p.tail_end, p.head_end), hi = std::max(p.tail_end, p.head_end);
      if (offset < lo || offset > hi) fail("unit outside committed block");
      if (offset == lo || offset == hi) kind = BlockKind::Final;
    }
    int id = new_block(p.level - 1, kind, parent, offset);
    item(parent, offset) = static_cast<std::uint32_t>(id);
    mark_created(parent, offset);
    return id;
  }

  int new_top_unit(int cycle, int lane) {
    if (cycles[cycle].closed) fail("extending a closed cycle");
    int id = new_block(top, BlockKind::Pending, kNone, 0);
    Lane& l = cycles[cycle].lanes[static_cast<std::size_t>(lane)];
    blocks[id].cycle = cycle;
    blocks[id].lane = lane;
    blocks[id].lane_index = static_cast<int>(l.units.size());
    l.units.push_back(id);
    return id;
  }

  // Block whose entry edge lands on the start vertex of `b`, or kNone at the
  // global origin.
  int entry_block(int b) const {
    while (blocks[b].kind == BlockKind::Origin) {
      int p = blocks[b].parent;
      if (p == kNone) return kNone;
      b = p;
    }
    return b;
  }

  VertexId entry_vertex(int b) {
    while (blocks[b].level > 0) b = unit(b, 0);
    return path(b, 0);
  }

  // ---- slot groups and links ----------------------------------------------

  int new_group(GroupKind kind, int level, int ref, int side, int size) {
    SlotGroup g;
    g.kind = kind;
    g.level = level;
    g.ref = ref;
    g.side = side;
    g.size = size;
    groups.push_back(g);
    return static_cast<int>(groups.size() - 1);
  }

  int head_group(int b) {
    if (blocks[b].head_group == kNone) {
      int g = new_group(GroupKind::Head, blocks[b].level, b, 0, 3);
      blocks[b].head_group = g;
    }
    return blocks[b].head_group;
  }

  int origin_group(int b, int side) {
    if (blocks[b].kind != BlockKind::Origin) fail("origin group of a non-origin block");
    auto s = static_cast<std::size_t>(side);
    if (blocks[b].origin_group[s] == kNone) {
      int g = new_group(GroupKind::OriginEnd, blocks[b].level, b, side, 2);
      blocks[b].origin_group[s] = g;
    }
    return blocks[b].origin_group[s];
  }

  int make_link(int group, int pair, int block, Side side) {
    auto p = static_cast<std::size_t>(pair);
    if (groups[group].link[p] != kNone) fail("connector linked twice");
    links.push_back(Link{group, pair, block, side});
    int id = static_cast<int>(links.size() - 1);
    groups[group].link[p] = id;
    if (side == Side::Main) {
      if (blocks[block].main_link != kNone) fail("block entered from two connectors");
      blocks[block].main_link = id;
    } else {
      blocks[block].second_link = id;
    }
    note(Decision::Kind::Linked, group, pair, block, side == Side::Main ? 0 : 1);
    return id;
  }

  int main_link(int b) {
    if (blocks[b].main_link != kNone) return blocks[b].main_link;
    int parent = blocks[b].parent;
    if (parent == kNone) fail("top block without an entry link");
    int o = blocks[b].offset;
    if (o == 0) fail("start unit has no entry link of its own");
    int s = sign(o);
    int prev = o - s;
    int g = prev == 0 ? origin_group(unit(parent, 0), s > 0 ? 1 : 0) : head_group(unit(parent, prev));
    if (groups[g].link[0] != kNone) {
      if (links[groups[g].link[0]].block != b) fail("neighbour connector points elsewhere");
      blocks[b].main_link = groups[g].link[0];
      return blocks[b].main_link;
    }
    return make_link(g, 0, b, Side::Main);
  }

  int link_of(int g, int pair) {
    if (groups[g].link[static_cast<std::size_t>(pair)] != kNone) return groups[g].link[static_cast<std::size_t>(pair)];
    const SlotGroup grp = groups[g];
    int target = kNone;
    switch (grp.kind) {
      case GroupKind::Head: {
        const Block& u = blocks[grp.ref];
        if (u.parent != kNone) {
          target = unit(u.parent, u.offset + sign(u.offset));
          if (blocks[target].main_link != kNone) fail("next unit already entered elsewhere");
        } else {
          if (int closing = pending_closing(u.cycle, u.lane); closing != kNone) return make_link(g, pair, closing, Side::Second);
          target = new_top_unit(u.cycle, u.lane);
        }
        break;
      }
      case GroupKind::OriginEnd: {
        const Block& o = blocks[grp.ref];
        if (o.parent != kNone) {
          target = unit(o.parent, grp.side == 1 ? 1 : -1);
          if (blocks[target].main_link != kNone) fail("next unit already entered elsewhere");
        } else {
          if (int closing = pending_closing(0, grp.side); closing != kNone) return make_link(g, pair, closing, Side::Second);
          target = new_top_unit(0, grp.side);
        }
        break;
      }
      case GroupKind::Connection: {
        const Connection& c = connections[grp.ref];
        if (pair == 0)
          if (int closing = pending_closing(c.cycle - 1, 2); closing != kNone) return make_link(g, pair, closing, Side::Second);
        target = pair == 0 ? new_top_unit(c.cycle - 1, 2) : new_top_unit(c.cycle, pair - 1);
        break;
      }
    }
    return make_link(g, pair, target, Side::Main);
  }

  bool has_role(const SlotGroup& g, SlotRole role, int pair) const {
    for (int i = 0; i < g.size; ++i)
      if (g.slots[i].role == role && g.slots[i].pair == pair) return true;
    return false;
  }

  void assign(int g, int i, SlotRole role, int pair) {
    groups[g].slots[i].role = role;
    groups[g].slots[i].pair = static_cast<std::int8_t>(pair);
    note(Decision::Kind::SlotBound, g, i, static_cast<int>(role), pair);
  }

  // Slot index carrying (role, pair), binding the lowest free slot if needed.
  // Head groups bind return, skip, backbone in that order; every pair binds
  // its skip before its backbone.
  int bind(int g, SlotRole role, int pair) {
    for (int i = 0; i < groups[g].size; ++i)
      if (groups[g].slots[i].role == role && groups[g].slots[i].pair == pair) return i;
    if (groups[g].kind == GroupKind::Head) {
      if (role == SlotRole::Skip) bind(g, SlotRole::Return, -1);
      if (role == SlotRole::Backbone) bind(g, SlotRole::Skip, 0);
    } else if (role == SlotRole::Backbone) {
      bind(g, SlotRole::Skip, pair);
    }
    for (int i = 0; i < groups[g].size; ++i) {
      if (groups[g].slots[i].role == SlotRole::Unbound) {
        assign(g, i, role, pair);
        return i;
      }
    }
    fail("no free slot in group " + std::to_string(g));
  }

  VertexId bind_target(int link, SlotRole role, VertexRole target, int block, int index) {
    const Link l = links[link];
    int i = bind(l.group, role, l.pair);
    VertexId far = groups[l.group].slots[i].far;
    if (far != kNoVertex) {
      retag(far, target, block, index);
      return far;
    }
    VertexId v = new_vertex(target, block, index);
    groups[l.group].slots[i].far = v;
    return v;
  }

  VertexId group_owner(int g) {
    const SlotGroup grp = groups[g];
    switch (grp.kind) {
      case GroupKind::Head: return head_vertex(grp.ref);
      case GroupKind::OriginEnd: return origin_end_owner(grp.ref, grp.side);
      case GroupKind::Connection: return connection_vertex(grp.ref);
    }
    return kNoVertex;
  }

  void materialize(int g, VertexId owner) {
    groups[g].owner = owner;
    const Weight w = weight_at(groups[g].level);
    for (int i = 0; i < groups[g].size; ++i) {
      VertexId far = groups[g].slots[i].far;
      if (far == kNoVertex) {
        far = new_vertex(VertexRole::Placeholder, g, i);
        groups[g].slots[i].far = far;
      }
      connect(owner, far, w, edge_kind_of(groups[g].slots[i].role));
    }
  }

  // ---- vertices by role ----------------------------------------------------

  VertexId path(int b, int offset) {
    if (std::uint32_t v = peek(b, offset); v != kEmpty) return v;
    if (blocks[b].level != 0) fail("path vertex of a higher block");
    VertexId v = kNoVertex;
    int owner = offset == 0 ? entry_block(b) : kNone;
    if (owner != kNone)
      v = bind_target(main_link(owner), SlotRole::Skip, VertexRole::Path, b, 0);
    else
      v = new_vertex(VertexRole::Path, b, offset);
    item(b, offset) = v;
    mark_created(b, offset);
    return v;
  }

  VertexId joint(int b) {
    if (blocks[b].joint != kNoVertex) return blocks[b].joint;
    BlockKind k = blocks[b].kind;
    if (k == BlockKind::Origin) fail("origin blocks have no joint");
    VertexId v = kNoVertex;
    if (k == BlockKind::Pending || k == BlockKind::Normal) {
      int g = head_group(b);
      int i = bind(g, SlotRole::Return, -1);
      v = groups[g].slots[i].far;
      if (v != kNoVertex) {
        retag(v, VertexRole::Joint, b, 0);
      } else {
        v = new_vertex(VertexRole::Joint, b, 0);
        groups[g].slots[i].far = v;
      }
    } else {
      v = new_vertex(VertexRole::Joint, b, 0);
    }
    blocks[b].joint = v;
    return v;
  }

  VertexId tail(int b) {
    if (blocks[b].tail != kNoVertex) return blocks[b].tail;
    VertexId v = bind_target(main_link(b), SlotRole::Backbone, VertexRole::Tail, b, 0);
    blocks[b].tail = v;
    return v;
  }

  VertexId tail2(int b) {
    if (blocks[b].tail2 != kNoVertex) return blocks[b].tail2;
    if (blocks[b].second_link == kNone) fail("closing without second connector");
    VertexId v = bind_target(blocks[b].second_link, SlotRole::Backbone, VertexRole::Tail2, b, 0);
    blocks[b].tail2 = v;
    return v;
  }

  // Vertex of a closing block that receives the second skip edge.
  VertexId pseudo_side(int b) {
    if (blocks[b].level > 0) return head_vertex(b);
    if (blocks[b].pseudo != kNoVertex) return blocks[b].pseudo;
    if (blocks[b].second_link == kNone) fail("closing without second connector");
    VertexId v = bind_target(blocks[b].second_link, SlotRole::Skip, VertexRole::PseudoStart, b, 0);
    blocks[b].pseudo = v;
    return v;
  }

  VertexId head_vertex(int b) {
    if (blocks[b].level == 0) {
      ensure_layout(b);
      return path(b, blocks[b].head_end);
    }
    if (blocks[b].head != kNoVertex) return blocks[b].head;
    if (blocks[b].kind == BlockKind::Origin) fail("origin blocks have no head");
    decide_kind(b);
    if (blocks[b].head != kNoVertex) return blocks[b].head;
    VertexId v = blocks[b].kind == BlockKind::Closing
                     ? bind_target(blocks[b].second_link, SlotRole::Skip, VertexRole::Head, b, 0)
                     : new_vertex(VertexRole::Head, b, 0);
    blocks[b].head = v;
    return v;
  }

  VertexId origin_end_owner(int b, int side) {
    if (blocks[b].level == 0) return path(b, side == 1 ? right_of(blocks[b]) : -left_of(blocks[b]));
    auto s = static_cast<std::size_t>(side);
    if (blocks[b].origin_head[s] == kNoVertex) {
      VertexId v = new_vertex(VertexRole::OriginHead, b, side);
      blocks[b].origin_head[s] = v;
    }
    return blocks[b].origin_head[s];
  }

  VertexId connection_vertex(int c) {
    if (connections[c].vertex == kNoVertex) connections[c].vertex = new_vertex(VertexRole::Connection, c, 0);
    return connections[c].vertex;
  }

  // Attachment of a final block's exit edge.
  VertexId parent_attach(int f) {
    const Block& fb = blocks[f];
    if (fb.parent == kNone) {
      if (fb.connection == kNone) fail("top final block without connection");
      return connection_vertex(fb.connection);
    }
    int p = fb.parent;
    int off = fb.offset;
    if (blocks[p].kind == BlockKind::Origin) return origin_end_owner(p, off > 0 ? 1 : 0);
    if (blocks[p].orient_pending) fix_orientation(p, off);
    return off == blocks[p].head_end ? head_vertex(p) : joint(p);
  }

  // ---- layout decisions ----------------------------------------------------

  void commit(int b, int tail_end, int head_end, bool open) {
    Block& blk = blocks[b];
    blk.committed = true;
    blk.tail_end = tail_end;
    blk.head_end = head_end;
    blk.orient_pending = open;
    note(Decision::Kind::LayoutFixed, b, tail_end, head_end, open ? 1 : 0);
    if (blk.level == 0) return;
    for (int e : {tail_end, head_end}) {
      std::uint32_t u = peek(b, e);
      if (u == kEmpty) continue;
      if (blocks[u].kind == BlockKind::Pending) {
        blocks[u].kind = BlockKind::Final;
        note(Decision::Kind::KindChosen, u, static_cast<int>(BlockKind::Final));
      } else if (blocks[u].kind != BlockKind::Final) {
        fail("examined unit placed at a block end");
      }
    }
  }

  void fix_orientation(int b, int head_end) {
    Block& blk = blocks[b];
    if (!blk.orient_pending) return;
    if (head_end != blk.head_end) {
      if (head_end != blk.tail_end) fail("orientation outside block ends");
      std::swap(blk.tail_end, blk.head_end);
    }
    blk.orient_pending = false;
    note(Decision::Kind::OrientationFixed, b, blk.tail_end, blk.head_end);
  }

  void default_orientation(int b) {
    if (!blocks[b].orient_pending) return;
    const Block& blk = blocks[b];
    bool tail_entered = peek(b, blk.tail_end) != kEmpty;
    bool head_entered = peek(b, blk.head_end) != kEmpty;
    fix_orientation(b, tail_entered && !head_entered ? blk.tail_end : blk.head_end);
  }

  void ensure_layout(int b) {
    if (blocks[b].committed) return;
    if (blocks[b].level == 0)
      forced_commit_path(b);
    else
      forced_commit_units(b);
  }

  bool free_path_end(int b, int e) {
    if (e == 0) return false;
    std::uint32_t v = peek(b, e);
    return v == kEmpty || !vertices[v].complete;
  }
  bool free_unit_end(int b, int e) {
    if (e == 0) return false;
    std::uint32_t u = peek(b, e);
    return u == kEmpty || blocks[u].kind == BlockKind::Pending;
  }

  // Chooses ends covering everything created so far, the tail preferably on
  // the low side and as close to the explored part as possible.
  template <class FreeEnd>
  bool place(int b, int len, FreeEnd free_end, bool need_y, int& tail_out, int& head_out) {
    const Block& blk = blocks[b];
    int lo = blk.lo, hi = blk.hi;
    for (int t = lo; t >= hi - (len - 1); --t) {
      int h = t + len - 1;
      if (t < 0 && h > 0 && free_end(t) && free_end(h) && (!need_y || h - 1 >= y)) {
        tail_out = t;
        head_out = h;
        return true;
      }
    }
    for (int t = hi; t <= lo + (len - 1); ++t) {
      int h = t - (len - 1);
      if (t > 0 && h < 0 && free_end(t) && free_end(h) && (!need_y || -h - 1 >= y)) {
        tail_out = t;
        head_out = h;
        return true;
      }
    }
    return false;
  }

  void forced_commit_path(int b) {
    if (!blocks[b].any) {
      commit(b, -1, path_len - 2, false);
      return;
    }
    int t = 0, h = 0;
    bool need_y = blocks[b].level < top;
    if (!place(b, path_len, [&](int e) { return free_path_end(b, e); }, need_y, t, h)) fail("no layout for block " + std::to_string(b));
    commit(b, t, h, false);
  }

  void forced_commit_units(int b) {
    bool open = blocks[b].level == top;
    if (!blocks[b].any) {
      commit(b, -1, x + 1, open);
      return;
    }
    int t = 0, h = 0;
    if (!place(b, unit_len, [&](int e) { return free_unit_end(b, e); }, !open, t, h)) fail("no layout for block " + std::to_string(b));
    commit(b, t, h, open);
  }

  // The quota of a level-0 block is reached at path vertex `o`.
  void quota_commit_path(int b, int o) {
    const Block& blk = blocks[b];
    int s = sign(o);
    int other = s > 0 ? blk.lo : blk.hi;
    if (std::abs(o - other) + 1 != path_len) fail("quota reached with unexpected extent");
    bool head_here = blk.level == top || std::abs(o) - 1 >= y;
    if (head_here)
      commit(b, other, o, false);
    else
      commit(b, o, other, false);
  }

  // The (x+1)-th unit of block b (its start unit included) was just examined at offset o.
  void quota_commit_units(int b, int o) {
    const Block& blk = blocks[b];
    int s = sign(o);
    int cur = o + s;
    int end = s > 0 ? blk.lo : blk.hi;
    std::uint32_t u = peek(b, end);
    int other = (end != 0 && u != kEmpty && blocks[u].kind == BlockKind::Pending) ? end : end - s;
    if (std::abs(cur - other) != unit_len - 1) fail("unit quota reached with unexpected extent");
    if (blk.level == top)
      commit(b, other, cur, true);
    else if (std::abs(o) >= y)
      commit(b, other, cur, false);
    else
      commit(b, cur, other, false);
  }

  // ---- block kinds ---------------------------------------------------------

  void set_kind(int b, BlockKind k) {
    blocks[b].kind = k;
    note(Decision::Kind::KindChosen, b, static_cast<int>(k));
  }

  void decide_kind(int b) {
    if (blocks[b].kind != BlockKind::Pending) return;
    int p = blocks[b].parent;
    if (p == kNone) {
      decide_top(b);
      return;
    }
    const Block& pb = blocks[p];
    int o = blocks[b].offset;
    if (pb.committed && (o == pb.tail_end || o == pb.head_end)) {
      set_kind(b, BlockKind::Final);
      return;
    }
    set_kind(b, BlockKind::Normal);
    blocks[p].examined += 1;
    if (!blocks[p].committed && blocks[p].examined + 1 == x + 1) quota_commit_units(p, o);
  }

  std::pair<int, int> root_connector(int c, int lane) {
    if (lane == 2) return {connections[cycles[c].next_connection].group, 0};
    if (c == 0) return {origin_group(top_origin, lane), 0};
    return {connections[cycles[c].anchor_connection].group, 1 + lane};
  }

  std::pair<int, int> lane_end_connector(int c, int lane) {
    const Lane& l = cycles[c].lanes[static_cast<std::size_t>(lane)];
    if (!l.units.empty()) return {head_group(l.units.back()), 0};
    return root_connector(c, lane);
  }

  void decide_top(int b) {
    int c = blocks[b].cycle;
    int lane = blocks[b].lane;
    Cycle& cy = cycles[c];
    BlockKind k = BlockKind::Normal;
    if (!cy.closed) {
      if (!cy.last) {
        if (cy.upper == kNone && lane < 2 && cy.lanes[static_cast<std::size_t>(lane)].normals == x / 2 + 1)
          k = BlockKind::Final;
        else if (cy.upper != kNone && cy.total == x + 2)
          k = BlockKind::Closing;
      } else {
        int threshold = params.topology == Topology::Chain ? x : x + 1;
        if (cy.total == threshold) k = BlockKind::Closing;
      }
    }
    set_kind(b, k);
    if (k == BlockKind::Normal) {
      cycles[c].lanes[static_cast<std::size_t>(lane)].normals += 1;
      cycles[c].total += 1;
    } else if (k == BlockKind::Final) {
      open_connection(b);
    } else {
      close_cycle(b);
    }
  }

  // Once a cycle holds all its normals, a lane that wants another unit must
  // meet the undecided unit waiting at the partner lane end: that unit becomes
  // the closing block and is entered from here through its second connector.
  int pending_closing(int c, int lane) {
    Cycle& cy = cycles[c];
    if (cy.closed) return kNone;
    int cap = 0, partner = kNone;
    if (cy.last) {
      cap = params.topology == Topology::Chain ? x : x + 1;
      partner = 1 - lane;
    } else {
      if (cy.upper == kNone) return kNone;
      int lower = 1 - cy.upper;
      cap = x + 2;
      partner = lane == lower ? 2 : lane == 2 ? lower : kNone;
    }
    if (partner == kNone || cy.total != cap) return kNone;
    const Lane& other = cy.lanes[static_cast<std::size_t>(partner)];
    if (other.units.empty()) return kNone;
    int u = other.units.back();
    if (blocks[u].kind != BlockKind::Pending) return kNone;
    set_kind(u, BlockKind::Closing);
    cy.closed = true;
    return u;
  }

  void open_connection(int f) {
    int c = blocks[f].cycle;
    int idx = static_cast<int>(connections.size());
    int g = new_group(GroupKind::Connection, top, idx, 0, 6);
    connections.push_back(Connection{g, c + 1, f, kNoVertex});
    blocks[f].connection = idx;
    cycles[c].upper = blocks[f].lane;
    cycles[c].next_connection = idx;
    Cycle next;
    next.last = c + 1 == x;
    next.anchor_connection = idx;
    cycles.push_back(next);
    note(Decision::Kind::ConnectionCreated, idx, c + 1, f);
  }

  void close_cycle(int b) {
    int c = blocks[b].cycle;
    int lane = blocks[b].lane;
    cycles[c].closed = true;
    std::pair<int, int> other;
    if (cycles[c].last) {
      other = lane_end_connector(c, 1 - lane);
    } else {
      int lower = 1 - cycles[c].upper;
      if (lane == lower)
        other = lane_end_connector(c, 2);
      else if (lane == 2)
        other = lane_end_connector(c, lower);
      else
        fail("closing on the upper lane");
    }
    make_link(other.first, other.second, b, Side::Second);
  }

  // ---- observation ---------------------------------------------------------

  SlotRole agent_role(int g, int& pair) {
    const SlotGroup& grp = groups[g];
    switch (grp.kind) {
      case GroupKind::Head:
        if (!has_role(grp, SlotRole::Return, -1)) {
          pair = -1;
          return SlotRole::Return;
        }
        pair = 0;
        return has_role(grp, SlotRole::Skip, 0) ? SlotRole::Backbone : SlotRole::Skip;
      case GroupKind::OriginEnd:
        pair = 0;
        return has_role(grp, SlotRole::Skip, 0) ? SlotRole::Backbone : SlotRole::Skip;
      case GroupKind::Connection: {
        const Connection& conn = connections[grp.ref];
        const Cycle& prev = cycles[conn.cycle - 1];
        if (!has_role(grp, SlotRole::Skip, 0) && !prev.closed && prev.lanes[2].units.empty()) {
          pair = 0;
          return SlotRole::Skip;
        }
        for (int p = 1; p <= 2; ++p)
          if (!has_role(grp, SlotRole::Skip, p)) {
            pair = p;
            return SlotRole::Skip;
          }
        for (int p = 0; p <= 2; ++p)
          if (has_role(grp, SlotRole::Skip, p) && !has_role(grp, SlotRole::Backbone, p)) {
            pair = p;
            return SlotRole::Backbone;
          }
        fail("connection vertex has no role left");
      }
    }
    fail("unknown group");
  }

  void resolve_placeholder(VertexId v) {
    int g = vertices[v].block;
    int i = vertices[v].index;
    if (groups[g].slots[i].role == SlotRole::Unbound) {
      int pair = 0;
      SlotRole role = agent_role(g, pair);
      assign(g, i, role, pair);
    }
    const Slot s = groups[g].slots[i];
    VertexId target = kNoVertex;
    switch (s.role) {
      case SlotRole::Return: target = joint(groups[g].ref); break;
      case SlotRole::Skip: {
        const Link l = links[link_of(g, s.pair)];
        target = l.side == Side::Main ? entry_vertex(l.block) : pseudo_side(l.block);
        break;
      }
      case SlotRole::Backbone: {
        const Link l = links[link_of(g, s.pair)];
        target = l.side == Side::Main ? tail(l.block) : tail2(l.block);
        break;
      }
      case SlotRole::Unbound: fail("unbound slot");
    }
    if (target != v) fail("placeholder resolved to another vertex");
  }

  void complete_path(VertexId v) {
    int b = vertices[v].block;
    int o = vertices[v].index;
    const Weight one = weight_at(-1);
    if (blocks[b].kind == BlockKind::Origin) {
      int left = left_of(blocks[b]), right = right_of(blocks[b]);
      if (o == 0) {
        int a = entry_block(b);
        if (a != kNone) connect(v, group_owner(links[main_link(a)].group), weight_at(blocks[a].level), EdgeKind::Skip);
      }
      if (o > -left) connect(v, path(b, o - 1), one, EdgeKind::Path);
      if (o < right) connect(v, path(b, o + 1), one, EdgeKind::Path);
      if (o == -left) materialize(origin_group(b, 0), v);
      if (o == right) materialize(origin_group(b, 1), v);
      return;
    }
    if (o == 0) connect(v, group_owner(links[main_link(b)].group), weight_at(0), EdgeKind::Skip);
    if (!blocks[b].committed) {
      blocks[b].explored += 1;
      if (blocks[b].explored == path_len - 1) quota_commit_path(b, o);
    }
    if (!blocks[b].committed) {
      connect(v, path(b, o - 1), one, EdgeKind::Path);
      connect(v, path(b, o + 1), one, EdgeKind::Path);
      return;
    }
    int lo = std::min(blocks[b].tail_end, blocks[b].head_end);
    int hi = std::max(blocks[b].tail_end, blocks[b].head_end);
    if (o < lo || o > hi) fail("path vertex outside its block");
    for (int d : {-1, 1}) {
      int end = d < 0 ? lo : hi;
      if (o != end)
        connect(v, path(b, o + d), one, EdgeKind::Path);
      else if (end == blocks[b].tail_end)
        connect(v, joint(b), zero(), EdgeKind::Zero);
      else
        head_apparatus(b, v);
    }
  }

  void head_apparatus(int b, VertexId v) {
    decide_kind(b);
    const Weight w = weight_at(blocks[b].level);
    switch (blocks[b].kind) {
      case BlockKind::Normal: materialize(head_group(b), v); break;
      case BlockKind::Final:
        connect(v, joint(b), w, EdgeKind::Return);
        connect(v, parent_attach(b), zero(), EdgeKind::Exit);
        break;
      case BlockKind::Closing:
        connect(v, joint(b), w, EdgeKind::Return);
        if (blocks[b].level == 0) {
          connect(v, pseudo_side(b), zero(), EdgeKind::Zero);
        } else {
          connect(v, tail2(b), zero(), EdgeKind::Zero);
          connect(v, group_owner(links[blocks[b].second_link].group), w, EdgeKind::Skip);
        }
        break;
      default: fail("head of block with undecided kind");
    }
  }

  void complete_joint(VertexId v) {
    int b = vertices[v].block;
    ensure_layout(b);
    default_orientation(b);
    connect(v, tail(b), zero(), EdgeKind::Zero);
    int te = blocks[b].tail_end;
    if (blocks[b].level == 0)
      connect(v, path(b, te), zero(), EdgeKind::Zero);
    else
      connect(v, head_vertex(unit(b, te)), zero(), EdgeKind::Exit);
    VertexId h = blocks[b].level == 0 ? path(b, blocks[b].head_end) : head_vertex(b);
    connect(v, h, weight_at(blocks[b].level), EdgeKind::Return);
  }

  void complete_head(VertexId v) {
    int b = vertices[v].block;
    ensure_layout(b);
    default_orientation(b);
    connect(v, head_vertex(unit(b, blocks[b].head_end)), zero(), EdgeKind::Exit);
    head_apparatus(b, v);
  }

  void complete(VertexId v) {
    if (vertices[v].complete) return;
    if (vertices[v].role == VertexRole::Placeholder) resolve_placeholder(v);
    const VertexInfo info = vertices[v];
    int b = info.block;
    switch (info.role) {
      case VertexRole::Path: complete_path(v); break;
      case VertexRole::Tail:
        connect(v, joint(b), zero(), EdgeKind::Zero);
        connect(v, group_owner(links[main_link(b)].group), weight_at(blocks[b].level), EdgeKind::Backbone);
        break;
      case VertexRole::Joint: complete_joint(v); break;
      case VertexRole::Head: complete_head(v); break;
      case VertexRole::PseudoStart:
        ensure_layout(b);
        connect(v, path(b, blocks[b].head_end), zero(), EdgeKind::Zero);
        connect(v, tail2(b), zero(), EdgeKind::Zero);
        connect(v, group_owner(links[blocks[b].second_link].group), weight_at(0), EdgeKind::Skip);
        break;
      case VertexRole::Tail2:
        connect(v, pseudo_side(b), zero(), EdgeKind::Zero);
        connect(v, group_owner(links[blocks[b].second_link].group), weight_at(blocks[b].level), EdgeKind::Backbone);
        break;
      case VertexRole::OriginHead: {
        int side = info.index;
        int extreme = side == 1 ? right_of(blocks[b]) : -left_of(blocks[b]);
        connect(v, head_vertex(unit(b, extreme)), zero(), EdgeKind::Exit);
        materialize(origin_group(b, side), v);
        break;
      }
      case VertexRole::Connection: {
        const Connection c = connections[b];
        connect(v, head_vertex(c.final_block), zero(), EdgeKind::Exit);
        materialize(c.group, v);
        break;
      }
      case VertexRole::Placeholder: fail("unresolved placeholder");
    }
    vertices[v].complete = true;
  }

  std::vector<Neighbor> answer(VertexId v) const {
    std::vector<Neighbor> out;
    out.reserve(incident[v].size());
    for (std::uint32_t id : incident[v]) {
      const EdgeRec& e = edges[id];
      out.push_back({e.u == v ? e.v : e.u, e.weight});
    }
    std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    return out;
  }

  void mix(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (value >> (8 * i)) & 0xFFu;
      hash *= 1099511628211ull;
    }
  }

  std::vector<Neighbor> observe(VertexId v) {
    if (v >= vertices.size() || !vertices[v].revealed) throw ExploreError(ErrorCode::UnknownVertex, std::to_string(v));
    if (!vertices[v].complete) {
      complete(v);
      ++observations;
    }
    std::vector<Neighbor> out = answer(v);
    mix(v);
    for (const Neighbor& nb : out) {
      mix(nb.to);
      mix(nb.weight.low64());
    }
    return out;
  }

  FinalWorld finalize() {
    while (!pending.empty()) {
      VertexId v = pending.back();
      pending.pop_back();
      if (!vertices[v].complete) complete(v);
    }
    for (const SlotGroup& g : groups) {
      if (g.owner == kNoVertex) continue;
      for (int i = 0; i < g.size; ++i) {
        const Slot& s = g.slots[i];
        if (s.role == SlotRole::Unbound) fail("unbound slot after finalize");
        for (std::uint32_t id : incident[g.owner]) {
          EdgeRec& e = edges[id];
          if (e.u == s.far || e.v == s.far) e.kind = edge_kind_of(s.role);
        }
      }
    }
    FinalWorld out;
    out.params = params;
    out.lifted = lift;
    out.origin = origin;
    out.graph = WeightedGraph(vertices.size());
    out.roles.reserve(vertices.size());
    out.vertex_block.reserve(vertices.size());
    for (const VertexInfo& info : vertices) {
      if (!info.complete) fail("incomplete vertex after finalize");
      out.roles.push_back(info.role);
      out.vertex_block.push_back(info.role == VertexRole::Connection ? kNone : info.block);
    }
    out.edge_kinds.reserve(edges.size());
    for (const EdgeRec& e : edges) {
      if (e.kind == EdgeKind::Unresolved) fail("unresolved edge after finalize");
      out.graph.add_edge(e.u, e.v, e.weight);
      out.edge_kinds.push_back(e.kind);
    }
    out.blocks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const Block& b = blocks[i];
      BlockSummary s;
      s.id = static_cast<int>(i);
      s.level = b.level;
      s.kind = b.kind;
      s.parent = b.parent;
      s.offset = b.offset;
      s.tail = b.tail;
      if (b.kind != BlockKind::Origin)
        s.head = b.level == 0 ? static_cast<VertexId>(peek(static_cast<int>(i), b.head_end)) : b.head;
      out.blocks.push_back(s);
    }
    return out;
  }
};

AdversaryWorld::AdversaryWorld(const Params& params, bool lift_zero_weights)
    : impl_(std::make_unique<Impl>(params, lift_zero_weights)) {}
AdversaryWorld::~AdversaryWorld() = default;

VertexId AdversaryWorld::origin() const { return impl_->origin; }
std::vector<Neighbor> AdversaryWorld::observe(VertexId v) { return impl_->observe(v); }
FinalWorld AdversaryWorld::finalize() { return impl_->finalize(); }
const ResolutionLog& AdversaryWorld::log() const { return impl_->log; }
const Params& AdversaryWorld::params() const { return impl_->params; }
std::size_t AdversaryWorld::vertex_count() const { return impl_->vertices.size(); }
std::size_t AdversaryWorld::observation_count() const { return impl_->observations; }
std::uint64_t AdversaryWorld::transcript_hash() const { return impl_->hash; }

std::vector<VertexId> FinalWorld::block_vertices(int block) const {
  std::vector<char> inside(blocks.size(), 0);
  // Parents are created before their units, so one forward pass suffices.
  for (const BlockSummary& b : blocks)
    if (b.id == block || (b.parent != -1 && inside[static_cast<std::size_t>(b.parent)])) inside[static_cast<std::size_t>(b.id)] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_block.size(); ++v)
    if (vertex_block[v] >= 0 && inside[static_cast<std::size_t>(vertex_block[v])]) out.push_back(v);
  return out;
}

std::map<VertexId, std::string> FinalWorld::annotations() const {
  std::map<VertexId, std::string> out;
  for (VertexId v = 0; v < roles.size(); ++v) {
    std::string label(to_string(roles[v]));
    if (vertex_block[v] >= 0) {
      const BlockSummary& b = blocks[static_cast<std::size_t>(vertex_block[v])];
      label += " b" + std::to_string(b.id) + " " + std::string(to_string(b.kind)) + " L" + std::to_string(b.level);
    }
    if (v == origin) label += " origin";
    out.emplace(v, std::move(label));
  }
  return out;
}

Tour explicit_opt_tour(const FinalWorld& world) {
  const WeightedGraph& g = world.graph;
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj(g.vertex_count());
  std::size_t structural = 0;
  Weight cost;
  for (std::uint32_t id = 0; id < edges.size(); ++id) {
    EdgeKind k = world.edge_kinds[id];
    if (k == EdgeKind::Skip || k == EdgeKind::Return) continue;
    adj[edges[id].u].push_back({edges[id].v, id});
    adj[edges[id].v].push_back({edges[id].u, id});
    cost += edges[id].weight;
    ++structural;
  }
  for (VertexId v = 0; v < adj.size(); ++v) {
    if (adj[v].size() % 2 != 0) throw ExploreError(ErrorCode::WorldInconsistency, "structural subgraph has odd degree at " + std::to_string(v));
    std::sort(adj[v].begin(), adj[v].end());
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(adj.size(), 0);
  std::vector<VertexId> stack{world.origin}, circuit;
  while (!stack.empty()) {
    VertexId v = stack.back();
    auto& c = cursor[v];
    while (c < adj[v].size() && used[adj[v][c].second]) ++c;
    if (c == adj[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[adj[v][c].second] = 1;
      stack.push_back(adj[v][c].first);
    }
  }
  if (circuit.size() != structural + 1)
    throw ExploreError(ErrorCode::WorldInconsistency, "structural subgraph is not connected");
  std::reverse(circuit.begin(), circuit.end());
  return Tour{std::move(circuit), cost};
}

Trace tour_as_trace(const Tour& tour, const WeightedGraph& graph) {
  Trace t;
  for (std::size_t i = 1; i < tour.walk.size(); ++i) {
    auto w = graph.edge_weight(tour.walk[i - 1], tour.walk[i]);
    if (!w) throw ExploreError(ErrorCode::WorldInconsistency, "tour uses a non-edge");
    t.moves.push_back({tour.walk[i - 1], tour.walk[i], *w});
    t.total += *w;
  }
  return t;
}

}  // namespace explore

#ifndef FAULTPATH_GRAPH_HPP_
#define FAULTPATH_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "faultpath/ext_dist.hpp"

namespace faultpath {

using NodeId = int32_t;
using EdgeId = int32_t;

constexpr NodeId kNoNode = -1;
constexpr EdgeId kNoEdge = -1;
// Links below kVirtualEdgeBase denote the virtual edge of hub index
// (kVirtualEdgeBase - link).
constexpr EdgeId kVirtualEdgeBase = -2;

inline bool is_virtual_link(EdgeId e) { return e <= kVirtualEdgeBase; }
inline int virtual_hub_index(EdgeId e) { return kVirtualEdgeBase - e; }
inline EdgeId virtual_link(int hub_index) { return kVirtualEdgeBase - hub_index; }

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct EdgeRef {
  EdgeId id = kNoEdge;
  NodeId u = kNoNode;  // u < v
  NodeId v = kNoNode;
};

class WeightedGraph {
 public:
  struct Edge {
    NodeId u, v;      // u < v
    int64_t weight;   // scaled to the global denominator, > 0
    uint64_t key;     // per-edge tiebreak, pairwise distinct
  };

  // Builds a graph from raw (u, v, weight) triples already scaled to a common
  // denominator. Tiebreak keys are drawn from a splitmix64 stream over `seed`.
  WeightedGraph(NodeId node_count, std::vector<std::tuple<NodeId, NodeId, int64_t>> edges,
                int64_t denominator, uint64_t seed, NodeId s = kNoNode, NodeId t = kNoNode);

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  EdgeRef edge_ref(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("edge id out of range");
    return EdgeRef{e, edges_[static_cast<size_t>(e)].u, edges_[static_cast<size_t>(e)].v};
  }
  ExtDist edge_dist(EdgeId e) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ExtDist::edge(ed.weight, ed.key);
  }
  // Looks up the edge id between two nodes, kNoEdge if absent.
  EdgeId find_edge(NodeId u, NodeId v) const;

  int64_t denominator() const { return denominator_; }
  uint64_t seed() const { return seed_; }
  NodeId source() const { return s_; }
  NodeId target() const { return t_; }

  // CSR adjacency: for u, neighbors() yields (neighbor, edge id).
  std::span<const std::pair<NodeId, EdgeId>> neighbors(NodeId u) const {
    return {adj_.data() + adj_offsets_[static_cast<size_t>(u)],
            adj_.data() + adj_offsets_[static_cast<size_t>(u) + 1]};
  }

  std::string serialize() const;

 private:
  NodeId node_count_;
  std::vector<Edge> edges_;
  int64_t denominator_;
  uint64_t seed_;
  NodeId s_, t_;
  std::vector<size_t> adj_offsets_;
  std::vector<std::pair<NodeId, EdgeId>> adj_;
};

WeightedGraph parse_graph(std::string_view text);

// Per-node weights of virtual edges attached to a hub node. Values may be
// infinite (no edge). Validity: weight(x) >= d(hub, x) for every x.
struct ShortcutWeights {
  NodeId hub = kNoNode;
  std::vector<ExtDist> weight;

  static ShortcutWeights all_infinite(NodeId hub, NodeId node_count) {
    return ShortcutWeights{hub, std::vector<ExtDist>(static_cast<size_t>(node_count),
                                                     ExtDist::infinity())};
  }
};

// A cheap, copyable restriction of a WeightedGraph: an optional node mask, an
// optional set of removed edges, plus up to two virtual hubs. Virtual edges
// connect the hub to every node with a finite weight; they carry no edge id
// and cannot fail, but may be individually suppressed (by far endpoint) when
// a computation removes a path that runs through one.
class GraphView {
 public:
  explicit GraphView(const WeightedGraph& g) : g_(&g) {}

  const WeightedGraph& graph() const { return *g_; }
  NodeId node_count() const { return g_->node_count(); }

  bool node_in(NodeId x) const {
    return node_mask_.empty() || node_mask_[static_cast<size_t>(x)] != 0;
  }
  bool edge_in(EdgeId e) const {
    if (edge_removed_.empty() || !edge_removed_[static_cast<size_t>(e)]) {
      const auto& ed = g_->edge(e);
      return node_in(ed.u) && node_in(ed.v);
    }
    return false;
  }

  int hub_count() const { return static_cast<int>(hubs_.size()); }
  NodeId hub_node(int i) const { return hubs_[static_cast<size_t>(i)].node; }
  const ShortcutWeights& hub_weights(int i) const { return *hubs_[static_cast<size_t>(i)].w; }

  GraphView without_edges(std::span<const EdgeId> ids) const;
  // Removes both the real and the virtual edges in a mixed link list; virtual
  // links are resolved against the adjacent node recorded alongside them.
  GraphView without_links(std::span<const std::pair<EdgeId, NodeId>> links) const;
  GraphView induced(const std::vector<uint8_t>& keep) const;
  GraphView with_hub(const ShortcutWeights& w) const;

  // Calls f(neighbor, link, weight) for every incident edge alive in the
  // view. `link` is an edge id for real edges or a virtual link code.
  template <typename F>
  void for_neighbors(NodeId u, F&& f) const {
    for (auto [v, e] : g_->neighbors(u)) {
      if (!edge_removed_.empty() && edge_removed_[static_cast<size_t>(e)]) continue;
      if (!node_in(v)) continue;
      f(v, e, g_->edge_dist(e));
    }
    for (int h = 0; h < hub_count(); ++h) {
      const Hub& hub = hubs_[static_cast<size_t>(h)];
      if (u == hub.node) {
        for (NodeId x = 0; x < node_count(); ++x) {
          if (x == hub.node || !node_in(x)) continue;
          if (!hub.removed.empty() && hub.removed[static_cast<size_t>(x)]) continue;
          const ExtDist& w = hub.w->weight[static_cast<size_t>(x)];
          if (w.is_infinite()) continue;
          f(x, virtual_link(h), w.through_virtual());
        }
      } else if (node_in(hub.node)) {
        if (!hub.removed.empty() && hub.removed[static_cast<size_t>(u)]) continue;
        const ExtDist& w = hub.w->weight[static_cast<size_t>(u)];
        if (w.is_infinite()) continue;
        f(hub.node, virtual_link(h), w.through_virtual());
      }
    }
  }

 private:
  struct Hub {
    NodeId node;
    const ShortcutWeights* w;
    std::vector<uint8_t> removed;  // by far endpoint; empty = none
  };

  const WeightedGraph* g_;
  std::vector<uint8_t> node_mask_;
  std::vector<uint8_t> edge_removed_;
  std::vector<Hub> hubs_;
};

// Enumerates edge ids crossing between A and its complement (exactly one
// endpoint with in_a != 0).
std::vector<EdgeId> cut_edges(const WeightedGraph& g, const std::vector<uint8_t>& in_a);

// Exact rational rendering of (num / den): plain integer, an exact decimal
// when the reduced denominator divides a power of ten, else "p/q".
std::string format_rational(int128 num, int64_t den);

uint64_t splitmix64(uint64_t& state);

}  // namespace faultpath

#endif  // FAULTPATH_GRAPH_HPP_

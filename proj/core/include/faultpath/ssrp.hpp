#ifndef FAULTPATH_SSRP_HPP_
#define FAULTPATH_SSRP_HPP_

#include <functional>
#include <unordered_map>
#include <vector>

#include "faultpath/graph.hpp"
#include "faultpath/sp_tree.hpp"

namespace faultpath {

// Single-source fault-distance table: one row per failable tree edge of the
// shortest-path tree from `source`; every other edge maps to the no-fault
// distances. Rows may be stored compactly over the reachable nodes only
// (set_alive); unlisted nodes fall back to the no-fault column.
class SsrpTable {
 public:
  NodeId source = kNoNode;
  std::vector<ExtDist> nofault;
  std::unordered_map<EdgeId, std::vector<ExtDist>> rows;

  const ExtDist& query(EdgeId e, NodeId x) const {
    auto it = rows.find(e);
    if (it == rows.end()) return nofault[static_cast<size_t>(x)];
    if (index_.empty()) return it->second[static_cast<size_t>(x)];
    int32_t i = index_[static_cast<size_t>(x)];
    return i < 0 ? nofault[static_cast<size_t>(x)] : it->second[static_cast<size_t>(i)];
  }
  bool has_row(EdgeId e) const { return rows.contains(e); }

  // Declares that rows are indexed by position in `alive`.
  void set_alive(const std::vector<NodeId>& alive, size_t universe) {
    index_.assign(universe, -1);
    for (size_t i = 0; i < alive.size(); ++i)
      index_[static_cast<size_t>(alive[i])] = static_cast<int32_t>(i);
  }
  bool compact() const { return !index_.empty(); }
  int32_t alive_index(NodeId x) const {
    return index_.empty() ? static_cast<int32_t>(x) : index_[static_cast<size_t>(x)];
  }

 private:
  std::vector<int32_t> index_;
};

// Base-solver contract: computes the table for a graph view (which may carry
// unfailable virtual edges as part of the base) from the given source. The
// optional filter keeps only the listed rows.
using SsrpSolver =
    std::function<SsrpTable(const GraphView&, NodeId, const std::vector<EdgeId>*)>;

// One Dijkstra per tree edge.
SsrpTable ssrp_naive(const GraphView& g, NodeId source,
                     const std::vector<EdgeId>* row_filter = nullptr);
SsrpSolver naive_solver();

// Fault distances restricted to a node set X and an edge set F.
struct RestrictedSsrp {
  std::vector<NodeId> nodes;   // X
  std::vector<EdgeId> edges;   // F
  std::vector<ExtDist> values; // edges.size() x nodes.size(), row-major

  const ExtDist& at(size_t edge_index, size_t node_index) const {
    return values[edge_index * nodes.size() + node_index];
  }
};

// SSRP in the graph augmented by valid shortcut weights `w` (w.weight[x] >=
// d(w.hub, x) for all x; w.hub == source). `g` must not already carry the
// hub; virtual edges never fail. Recursion: centroid-split the tree, peel the
// hub into per-part weights, recurse, and stitch with two base-solver calls.
SsrpTable ssrp_shortcut(const GraphView& g, NodeId source, const ShortcutWeights& w,
                        const SsrpSolver& base,
                        const std::vector<EdgeId>* row_filter = nullptr);

// Variant for arbitrary (not necessarily valid) weights, sound only for
// (x, e) in X x F such that whenever the augmented shortest path to x uses a
// virtual edge, e does not lie on it. The caller guarantees the condition;
// validation mode re-checks it.
RestrictedSsrp ssrp_shortcut_restricted(const GraphView& g, NodeId source,
                                        const ShortcutWeights& w,
                                        const std::vector<NodeId>& xs,
                                        const std::vector<EdgeId>& fs,
                                        const SsrpSolver& base);

}  // namespace faultpath

#endif  // FAULTPATH_SSRP_HPP_

#ifndef FAULTPATH_FRP2_ONPATH_HPP_
#define FAULTPATH_FRP2_ONPATH_HPP_

#include <map>
#include <utility>
#include <vector>

#include "faultpath/ssrp.hpp"

namespace faultpath {

// Dense table of d_{G-e,e'}(s,t) over ordered pairs of s-t path edge
// positions (0-based edge index along the path); symmetric, diagonal holds
// the single-fault values.
struct OnPathTable {
  std::vector<EdgeId> path_edges;
  std::vector<ExtDist> values;  // size^2, row-major

  size_t size() const { return path_edges.size(); }
  const ExtDist& at(size_t i, size_t j) const { return values[i * size() + j]; }
};

// Split of the graph at a path edge f = {a, b} into disjoint induced parts A
// (s side) and B (t side), each with hub weights that preserve dual-fault
// distances: d_{G~-e,e'}(s,t) = d_{A~-e,e'}(s,a) + d(a,t) for e,e' before f,
// and symmetrically on the B side.
struct PartitionPair {
  std::vector<uint8_t> in_a, in_b;
  ShortcutWeights a_near;  // wrt s in A
  ShortcutWeights a_far;   // wrt a in A
  ShortcutWeights b_near;  // wrt b in B
  ShortcutWeights b_far;   // wrt t in B
};

PartitionPair both_divide(const GraphView& g, const SpTree& from_s, const SpTree& from_t,
                          const std::vector<NodeId>& path_nodes, size_t f_index,
                          const ShortcutWeights& ws, const ShortcutWeights& wt);

// Values d_{G~-e,e'}(s,t) for e before the split node c and e' after it,
// keyed by (edge position i, edge position j), i <= c_index < j.
std::map<std::pair<size_t, size_t>, ExtDist> both_conquer(
    const GraphView& g, NodeId s, NodeId t, const ShortcutWeights& ws,
    const ShortcutWeights& wt, const PathOnTree& path, size_t c_index,
    const std::vector<ExtDist>& from_s_at_c, const std::vector<ExtDist>& from_t_at_c,
    const SsrpSolver& base);

OnPathTable solve_onpath(const GraphView& g, NodeId s, NodeId t, const SsrpSolver& base);

}  // namespace faultpath

#endif  // FAULTPATH_FRP2_ONPATH_HPP_

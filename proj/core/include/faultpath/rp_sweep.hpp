#ifndef FAULTPATH_RP_SWEEP_HPP_
#define FAULTPATH_RP_SWEEP_HPP_

#include <vector>

#include "faultpath/sp_tree.hpp"
#include "faultpath/ssrp.hpp"

namespace faultpath {

// Single-fault replacement paths for every edge on the canonical s-t path,
// plus, per fault, the dual-fault value for the unique replacement-path edge
// that crosses the fault's subtree cut.
struct RpResult {
  PathOnTree path;                      // canonical s-t path
  std::vector<EdgeId> path_edges;       // real ids, in order from s
  std::vector<ExtDist> dist;            // d_{G-e}(s,t) per path edge
  std::vector<EdgeId> crossing;         // cut-crossing edge per fault (kNoEdge if none)
  std::vector<ExtDist> dual;            // d_{G-e-crossing}(s,t) per fault
  std::vector<std::vector<EdgeId>> replacement;  // pi_{G-e}(s,t) as edge ids
  std::vector<EdgeId> union_edges;      // distinct edges across all replacements
};

// `far_ssrp` (the fault table from t) corrects the tail distances of the
// dual-fault minimization when the crossing edge lies in the tree of t; the
// plain second minimum is only sound when it does not.
RpResult rp_sweep(const GraphView& g, NodeId s, NodeId t, const SpTree& from_s,
                  const SpTree& from_t, const SsrpTable& far_ssrp);

// Index of the deepest s-t-path node that is an ancestor (or self) of each
// node in `from_s`; -1 for nodes unreachable from the path root.
std::vector<int32_t> deepest_path_ancestor(const SpTree& from_s,
                                           const std::vector<NodeId>& path_nodes);

}  // namespace faultpath

#endif  // FAULTPATH_RP_SWEEP_HPP_

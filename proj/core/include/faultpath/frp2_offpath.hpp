#ifndef FAULTPATH_FRP2_OFFPATH_HPP_
#define FAULTPATH_FRP2_OFFPATH_HPP_

#include <map>
#include <utility>
#include <vector>

#include "faultpath/rmq.hpp"
#include "faultpath/rp_sweep.hpp"
#include "faultpath/ssrp.hpp"

namespace faultpath {

// Where the second fault sits relative to the first fault's subtree, seen
// from either endpoint. kCross pairs are answered by the sweep; kDetour by
// one centroid pass; kTreeTree (an edge of both trees) by the window
// recursion, in the orientation whose subtrees are disjoint.
enum class OffPathCase { kCrossNear, kCrossFar, kDetourNear, kDetourFar, kTreeTree };

struct PlacementTag {
  OffPathCase placement;
  bool near_witness = false;  // for kTreeTree: disjointness holds seen from s
};

// Everything the off-path machinery needs about one direction.
struct Orientation {
  NodeId from = kNoNode, to = kNoNode;
  const SpTree* near_tree = nullptr;  // rooted at `from`
  const SpTree* far_tree = nullptr;   // rooted at `to`
  const SsrpTable* far_ssrp = nullptr;
  std::vector<NodeId> path_nodes;  // ordered from `from`
  std::vector<EdgeId> path_ids;
  std::vector<int32_t> anc;  // deepest path ancestor in near_tree
};

PlacementTag classify(const Orientation& near, const Orientation& far, size_t fault_index,
                      EdgeRef e2);

// Per-node minimum of near.dist[x] + w(x, y) over x restricted to a pre-order
// interval set of the near tree.
class NeighborMin {
 public:
  NeighborMin(const GraphView& g, const SpTree& near);
  ExtDist query(NodeId y, const IntervalSet& xs) const;

 private:
  struct PerNode {
    std::vector<int32_t> pos;  // sorted pre-order positions of neighbors
    std::vector<ExtDist> val;
    std::vector<std::vector<int32_t>> table;  // sparse argmin table
  };
  ExtDist range_min(const PerNode& pn, int32_t lo, int32_t hi) const;
  std::vector<PerNode> per_node_;
};

// d_{f,f'} = min over alive edges {x, y} != f with x in T \ sub(f) and
// y in sub(f) (global subtree) of near.dist[x] + w(x,y) + far_ssrp[f'](y),
// for every f in fs (tree edges inside the member set) and f' in fps.
std::map<std::pair<EdgeId, EdgeId>, ExtDist> centroid_min(
    const GraphView& g, const SpTree& near_tree, const SsrpTable& far_ssrp, NodeId root,
    const std::vector<uint8_t>& member, const std::vector<EdgeId>& fs,
    const std::vector<EdgeId>& fps);

// A dual-fault pair in the off-path domain: `fault_index` indexes the path
// edge (from the orientation's `from` end), e2 is the off-path edge.
struct OffPair {
  size_t fault_index;
  EdgeId e2;
};

// Values for pairs whose second fault is outside the near tree and does not
// cross the fault subtree: one centroid pass over the whole near tree.
std::map<std::pair<EdgeId, EdgeId>, ExtDist> solve_case_detour(
    const GraphView& g, const Orientation& o, const std::vector<OffPair>& pairs);

// Values for pairs whose second fault lies in both trees, witnessed disjoint
// in this orientation: recursive window decomposition.
std::map<std::pair<EdgeId, EdgeId>, ExtDist> solve_case_tree(
    const GraphView& g, const Orientation& o, const NeighborMin& nm,
    const std::vector<OffPair>& pairs);

}  // namespace faultpath

#endif  // FAULTPATH_FRP2_OFFPATH_HPP_

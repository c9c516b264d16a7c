#ifndef FAULTPATH_SP_TREE_HPP_
#define FAULTPATH_SP_TREE_HPP_

#include <vector>

#include "faultpath/graph.hpp"

namespace faultpath {

// A link on a tree path: the edge id (or virtual link code) together with the
// endpoint it leads to, so virtual edges can be removed from views.
struct PathLink {
  EdgeId link = kNoEdge;
  NodeId to = kNoNode;
};

// Shortest-path tree from a fixed source under exact ExtDist comparison.
// Pre-order intervals give O(1) subtree membership.
class SpTree {
 public:
  NodeId source = kNoNode;
  std::vector<ExtDist> dist;
  std::vector<NodeId> parent;       // kNoNode for source and unreachable nodes
  std::vector<EdgeId> parent_link;  // edge id or virtual link code
  std::vector<int32_t> pre_in;      // -1 for unreachable
  std::vector<int32_t> pre_out;
  std::vector<NodeId> order;        // pre-order listing of reachable nodes

  bool reachable(NodeId x) const { return pre_in[static_cast<size_t>(x)] >= 0; }

  // True iff x lies in the subtree rooted at `root` (false when unreachable).
  bool in_subtree(NodeId root, NodeId x) const {
    int32_t rx = pre_in[static_cast<size_t>(x)];
    if (rx < 0 || !reachable(root)) return false;
    return pre_in[static_cast<size_t>(root)] <= rx && rx < pre_out[static_cast<size_t>(root)];
  }

  // Children of each node, ordered by node id (computed on build).
  const std::vector<NodeId>& children(NodeId x) const {
    return children_[static_cast<size_t>(x)];
  }
  int32_t subtree_size(NodeId x) const { return subtree_size_[static_cast<size_t>(x)]; }

  void finalize();  // fills pre-order, children, sizes from parent[]

 private:
  std::vector<std::vector<NodeId>> children_;
  std::vector<int32_t> subtree_size_;
};

SpTree dijkstra(const GraphView& g, NodeId source);

struct PathOnTree {
  std::vector<NodeId> nodes;     // v_0 = source, ..., v_{l-1} = target
  std::vector<PathLink> links;   // links[i] joins nodes[i] and nodes[i+1]
  std::vector<ExtDist> prefix;   // prefix[i] = distance from source to nodes[i]

  size_t hops() const { return links.size(); }
  ExtDist total() const { return prefix.empty() ? ExtDist::zero() : prefix.back(); }
  // Real edge ids on the path, skipping virtual links.
  std::vector<EdgeId> edge_ids() const;
  std::vector<std::pair<EdgeId, NodeId>> link_pairs() const;
};

PathOnTree extract_path(const SpTree& tree, NodeId target);

// Division of a rooted tree at a node c into two edge-disjoint parts sharing
// only c, each holding between ceil(n/3) and ceil(2n/3) nodes.
struct CentroidSplit {
  NodeId centroid = kNoNode;
  std::vector<uint8_t> in_t1;  // root side, includes centroid
  std::vector<uint8_t> in_t2;  // centroid side, includes centroid
  int32_t size_t1 = 0;
  int32_t size_t2 = 0;
};

// Splits the subtree of `tree` induced by `member` (must be connected and
// contain `root`); pass an empty member vector for the whole tree. Requires
// at least 3 member nodes.
CentroidSplit centroid_split(const SpTree& tree, NodeId root,
                             const std::vector<uint8_t>& member);

}  // namespace faultpath

#endif  // FAULTPATH_SP_TREE_HPP_

#ifndef FAULTPATH_ORACLE_HPP_
#define FAULTPATH_ORACLE_HPP_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "faultpath/graph.hpp"
#include "faultpath/ssrp.hpp"

namespace faultpath {

struct TriangleInstance;

// Reference implementations: everything here recomputes from scratch with
// plain Dijkstra over a materialized edge list (virtual hub edges become
// explicit unfailable edges), independent of the solver recursion it checks.

// Materialized copy of a view, with virtual edges expanded.
class OracleGraph {
 public:
  explicit OracleGraph(const GraphView& g);

  NodeId node_count() const { return n_; }
  // Distances from src with the listed real edge ids removed.
  std::vector<ExtDist> dist_without(NodeId src, std::span<const EdgeId> removed) const;

 private:
  struct Arc {
    NodeId to;
    EdgeId id;  // kNoEdge for unfailable (virtual) edges
    ExtDist w;
  };
  NodeId n_;
  std::vector<std::vector<Arc>> adj_;
};

// Exhaustive minimum over simple paths; only sensible for tiny graphs.
ExtDist enumerate_paths_dist(const GraphView& g, NodeId s, NodeId t);

// Replacement distances d_{G-e}(s,t) for every edge e on the canonical s-t
// path, in path order.
struct BruteRp {
  std::vector<EdgeId> path_edges;
  std::vector<ExtDist> dist;
};
BruteRp brute_rp(const GraphView& g, NodeId s, NodeId t);

// Per-tree-edge table over the (possibly augmented) view.
SsrpTable brute_ssrp(const GraphView& g, NodeId source);

// All-pairs dual-fault distances for fixed endpoints.
class Brute2Frp {
 public:
  Brute2Frp(const GraphView& g, NodeId s, NodeId t);
  // Distance with {e, f} removed (e == f means a single removal).
  ExtDist query(EdgeId e, EdgeId f) const;
  ExtDist nofault() const { return nofault_; }

 private:
  const ExtDist& slot(EdgeId e, EdgeId f) const;
  EdgeId m_;
  ExtDist nofault_;
  std::vector<ExtDist> single_;
  std::vector<ExtDist> pair_;  // upper triangle, e < f
};

struct BruteTriangleResult {
  std::vector<uint8_t> exists;     // per a_i
  std::vector<int64_t> min_sum;    // per a_i; 0 when none (unweighted: 3)
};
BruteTriangleResult brute_triangle(const TriangleInstance& inst);

}  // namespace faultpath

#endif  // FAULTPATH_ORACLE_HPP_

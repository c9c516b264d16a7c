#ifndef FAULTPATH_FRP2_HPP_
#define FAULTPATH_FRP2_HPP_

#include <map>
#include <string>
#include <vector>

#include "faultpath/frp2_onpath.hpp"
#include "faultpath/ssrp.hpp"

namespace faultpath {

// Dual-fault distance table for fixed endpoints. Stores the canonical path,
// per-path-edge single-fault data, and a sparse pair map; every other pair is
// answered by rule (a fault off both relevant paths cannot matter).
class Frp2Table {
 public:
  NodeId s = kNoNode, t = kNoNode;
  EdgeId edge_count = 0;
  ExtDist nofault = ExtDist::infinity();
  std::vector<EdgeId> path_edges;
  std::vector<ExtDist> single_fault;             // per path edge
  std::vector<std::vector<EdgeId>> replacement;  // per path edge
  std::map<std::pair<EdgeId, EdgeId>, ExtDist> pair_values;  // normalized keys

  ExtDist query(EdgeId e, EdgeId f) const;
  bool on_path(EdgeId e) const;
  // One row per stored pair (diagonal rows carry the single-fault values);
  // distances unscaled by the graph's denominator.
  std::string to_csv(const WeightedGraph& g) const;

 private:
  friend Frp2Table solve_2frp(const GraphView&, NodeId, NodeId, const SsrpSolver&);
  std::vector<int32_t> path_index_;  // edge id -> position on path, or -1
};

Frp2Table solve_2frp(const GraphView& g, NodeId s, NodeId t, const SsrpSolver& base);

inline Frp2Table solve_2frp(const GraphView& g, NodeId s, NodeId t) {
  return solve_2frp(g, s, t, naive_solver());
}

}  // namespace faultpath

#endif  // FAULTPATH_FRP2_HPP_

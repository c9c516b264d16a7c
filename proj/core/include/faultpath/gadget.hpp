#ifndef FAULTPATH_GADGET_HPP_
#define FAULTPATH_GADGET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "faultpath/frp2.hpp"
#include "faultpath/graph.hpp"

namespace faultpath {

// Tripartite triangle instance: parts A (small), B, C (large). Edges are
// (a, b), (b, c) and (c, a) index pairs into the parts; weights optional.
struct TriangleInstance {
  int32_t a_count = 0;
  int32_t bc_count = 0;
  std::vector<std::pair<int32_t, int32_t>> edges_ab, edges_bc, edges_ca;
  std::vector<int64_t> w_ab, w_bc, w_ca;
  int64_t max_weight = 0;  // M; 0 means unweighted

  bool weighted() const { return max_weight > 0; }
};

// The embedding: per a_i a designated fault pair (e_i, e'_i) whose dual-fault
// s-t distance hits an exact threshold iff a triangle runs through a_i.
// Weighted instances decode the minimum triangle weight sum as well, provided
// it stays below max_weight + 4 (guaranteed when max_weight >= 3x the actual
// largest edge weight).
struct GadgetGraph {
  WeightedGraph graph;
  NodeId s, t;
  int32_t a_count, bc_count;
  bool weighted;
  std::vector<NodeId> x_nodes, y_nodes;  // a_count + 1 each
  std::vector<NodeId> a_nodes, a2_nodes;
  struct Threshold {
    int128 num;  // structural part, scaled by den
    int64_t den; // 1 (unweighted) or M + 1
  };
  std::vector<Threshold> thresholds;

  EdgeId fault_x(int32_t i) const;  // e_i = {x_i, x_{i+1}}
  EdgeId fault_y(int32_t i) const;  // e'_i = {y_i, y_{i+1}}
  std::string sidecar() const;
};

GadgetGraph build_gadget_unweighted(const TriangleInstance& inst, uint64_t seed);
GadgetGraph build_gadget_weighted(const TriangleInstance& inst, uint64_t seed);
inline GadgetGraph build_gadget(const TriangleInstance& inst, uint64_t seed) {
  return inst.weighted() ? build_gadget_weighted(inst, seed)
                         : build_gadget_unweighted(inst, seed);
}

struct GadgetDecode {
  std::vector<uint8_t> exists;
  std::vector<int64_t> min_sum;  // valid where exists
};
GadgetDecode decode_gadget(const GadgetGraph& gg, const Frp2Table& frp);

// An exact rational distance, as read back from a CSV field.
struct RationalValue {
  bool finite = false;
  int128 num = 0;
  int64_t den = 1;
};
RationalValue parse_rational_field(const std::string& field);

// Decode from per-pair values produced by any route (solver or file).
GadgetDecode decode_values(const std::vector<GadgetGraph::Threshold>& thresholds,
                           const std::vector<RationalValue>& values);

// Sidecar round trip for out-of-process decoding: one line per i with
// "i x_i y_i a_i a2_i threshold_num threshold_den" plus a final line for the
// dummy pair.
struct GadgetSidecar {
  std::vector<NodeId> x_nodes, y_nodes, a_nodes, a2_nodes;
  std::vector<GadgetGraph::Threshold> thresholds;
};
GadgetSidecar parse_sidecar(const std::string& text);
GadgetDecode decode_from_sidecar(const GadgetSidecar& sc, const WeightedGraph& g,
                                 const Frp2Table& frp);

}  // namespace faultpath

#endif  // FAULTPATH_GADGET_HPP_

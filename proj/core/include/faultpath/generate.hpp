#ifndef FAULTPATH_GENERATE_HPP_
#define FAULTPATH_GENERATE_HPP_

#include "faultpath/gadget.hpp"
#include "faultpath/graph.hpp"

namespace faultpath {

// Deterministic seeded generators shared by tests, the acceptance suite and
// the bench subcommand.

// Random spanning tree plus a `density` fraction of the remaining pairs;
// weights uniform in [1, max_weight]. s and t are distinct random nodes.
WeightedGraph random_connected_graph(NodeId n, double density, int64_t max_weight,
                                     uint64_t seed);

// Sparse connected graph with about `avg_degree * n / 2` edges.
WeightedGraph random_sparse_graph(NodeId n, double avg_degree, int64_t max_weight,
                                  uint64_t seed);

TriangleInstance random_triangle_instance(int32_t a_count, int32_t bc_count,
                                          double density, int64_t max_weight,
                                          uint64_t seed);

}  // namespace faultpath

#endif  // FAULTPATH_GENERATE_HPP_

#ifndef FAULTPATH_TESTS_FIXTURES_HPP_
#define FAULTPATH_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "faultpath/generate.hpp"
#include "faultpath/graph.hpp"
#include "faultpath/oracle.hpp"
#include "faultpath/sp_tree.hpp"

namespace fptest {

using namespace faultpath;

// Four nodes, one short and one long s-t route; header designates 0 -> 3.
inline WeightedGraph diamond() {
  return parse_graph("4 4 0 3\n0 1 1\n1 2 1\n0 3 1\n3 2 3\n");
}

// Same edges with the target on the two-hop side (0 -> 2): the canonical
// path is 0-1-2 and the alternative 0-3-2 costs 4.
inline WeightedGraph route_diamond() {
  return parse_graph("4 4 0 2\n0 1 1\n1 2 1\n0 3 1\n3 2 3\n");
}

inline WeightedGraph p3() { return parse_graph("3 2 0 2\n0 1 1\n1 2 1\n"); }

inline WeightedGraph k4() {
  return parse_graph("4 6 0 1\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n");
}

inline WeightedGraph c5() {
  return parse_graph("5 5 0 2\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 0 1\n");
}

// Seeded mixed-density corpus; density cycles from tree-like to near-complete
// and weights alternate between unit and [1, 10].
struct CorpusSpec {
  NodeId n;
  double density;
  int64_t max_weight;
  uint64_t seed;
};

inline std::vector<CorpusSpec> corpus_specs(size_t count, NodeId n_min, NodeId n_max,
                                            uint64_t seed0) {
  static const double kDensities[] = {0.0, 0.05, 0.1, 0.2, 0.4, 0.7, 1.0};
  std::vector<CorpusSpec> out;
  uint64_t state = seed0;
  for (size_t i = 0; i < count; ++i) {
    uint64_t r = splitmix64(state);
    NodeId n = n_min + static_cast<NodeId>(r % static_cast<uint64_t>(n_max - n_min + 1));
    double d = kDensities[i % (sizeof(kDensities) / sizeof(kDensities[0]))];
    int64_t w = (i % 3 == 0) ? 1 : 10;
    out.push_back(CorpusSpec{n, d, w, splitmix64(state)});
  }
  return out;
}

inline WeightedGraph make_graph(const CorpusSpec& s) {
  return random_connected_graph(s.n, s.density, s.max_weight, s.seed);
}

// Valid shortcut weights from `hub`: a deterministic mix of infinite, tight
// and slack entries.
inline ShortcutWeights random_valid_shortcuts(const GraphView& g, NodeId hub,
                                              uint64_t seed) {
  SpTree tree = dijkstra(g, hub);
  ShortcutWeights w = ShortcutWeights::all_infinite(hub, g.node_count());
  uint64_t state = seed ^ 0xd6e8feb86659fd93ULL;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (x == hub || !tree.reachable(x)) continue;
    switch (splitmix64(state) % 3) {
      case 0:
        break;  // infinite
      case 1:
        w.weight[static_cast<size_t>(x)] = tree.dist[static_cast<size_t>(x)];
        break;
      default:
        w.weight[static_cast<size_t>(x)] =
            tree.dist[static_cast<size_t>(x)] +
            ExtDist::finite(static_cast<int64_t>(splitmix64(state) % 7),
                            static_cast<int64_t>(splitmix64(state) % 1024));
        break;
    }
  }
  return w;
}

}  // namespace fptest

#endif  // FAULTPATH_TESTS_FIXTURES_HPP_

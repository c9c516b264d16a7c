#include "faultpath/generate.hpp"

#include <algorithm>
#include <unordered_set>

namespace faultpath {

namespace {

uint64_t draw(uint64_t& state, uint64_t bound) { return splitmix64(state) % bound; }

int64_t draw_weight(uint64_t& state, int64_t max_weight) {
  return max_weight <= 1 ? 1 : 1 + static_cast<int64_t>(draw(state, static_cast<uint64_t>(max_weight)));
}

}  // namespace

WeightedGraph random_connected_graph(NodeId n, double density, int64_t max_weight,
                                     uint64_t seed) {
  uint64_t state = seed ^ 0x8f1bbcdcbfa53e0bULL;
  std::vector<std::tuple<NodeId, NodeId, int64_t>> edges;
  std::unordered_set<uint64_t> present;
  auto add = [&](NodeId u, NodeId v) {
    NodeId a = std::min(u, v), b = std::max(u, v);
    uint64_t code = (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
    if (!present.insert(code).second) return;
    edges.emplace_back(a, b, draw_weight(state, max_weight));
  };
  for (NodeId v = 1; v < n; ++v)
    add(static_cast<NodeId>(draw(state, static_cast<uint64_t>(v))), v);
  if (n >= 2 && density > 0) {
    uint64_t threshold = static_cast<uint64_t>(density * 4294967296.0);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if ((splitmix64(state) & 0xffffffffULL) < threshold) add(u, v);
  }
  NodeId s = static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  NodeId t = n < 2 ? s : static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  while (n >= 2 && t == s) t = static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  return WeightedGraph(n, std::move(edges), 1, seed, s, t);
}

WeightedGraph random_sparse_graph(NodeId n, double avg_degree, int64_t max_weight,
                                  uint64_t seed) {
  uint64_t state = seed ^ 0x5851f42d4c957f2dULL;
  std::vector<std::tuple<NodeId, NodeId, int64_t>> edges;
  std::unordered_set<uint64_t> present;
  auto add = [&](NodeId u, NodeId v) {
    if (u == v) return false;
    NodeId a = std::min(u, v), b = std::max(u, v);
    uint64_t code = (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
    if (!present.insert(code).second) return false;
    edges.emplace_back(a, b, draw_weight(state, max_weight));
    return true;
  };
  for (NodeId v = 1; v < n; ++v)
    add(static_cast<NodeId>(draw(state, static_cast<uint64_t>(v))), v);
  int64_t target = static_cast<int64_t>(avg_degree * n / 2);
  int64_t guard = 0;
  while (static_cast<int64_t>(edges.size()) < target && guard < 20 * target) {
    ++guard;
    add(static_cast<NodeId>(draw(state, static_cast<uint64_t>(n))),
        static_cast<NodeId>(draw(state, static_cast<uint64_t>(n))));
  }
  NodeId s = static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  NodeId t = n < 2 ? s : static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  while (n >= 2 && t == s) t = static_cast<NodeId>(draw(state, static_cast<uint64_t>(n)));
  return WeightedGraph(n, std::move(edges), 1, seed, s, t);
}

TriangleInstance random_triangle_instance(int32_t a_count, int32_t bc_count,
                                          double density, int64_t max_weight,
                                          uint64_t seed) {
  uint64_t state = seed ^ 0x94d049bb133111ebULL;
  TriangleInstance inst;
  inst.a_count = a_count;
  inst.bc_count = bc_count;
  inst.max_weight = max_weight;
  uint64_t threshold = static_cast<uint64_t>(density * 4294967296.0);
  auto coin = [&] { return (splitmix64(state) & 0xffffffffULL) < threshold; };
  // Weights stay at or below max_weight / 3 so the decode threshold argument
  // applies regardless of which triples show up.
  int64_t wmax = std::max<int64_t>(1, max_weight / 3);
  for (int32_t a = 0; a < a_count; ++a)
    for (int32_t b = 0; b < bc_count; ++b)
      if (coin()) {
        inst.edges_ab.emplace_back(a, b);
        if (max_weight > 0) inst.w_ab.push_back(draw_weight(state, wmax));
      }
  for (int32_t b = 0; b < bc_count; ++b)
    for (int32_t c = 0; c < bc_count; ++c)
      if (coin()) {
        inst.edges_bc.emplace_back(b, c);
        if (max_weight > 0) inst.w_bc.push_back(draw_weight(state, wmax));
      }
  for (int32_t c = 0; c < bc_count; ++c)
    for (int32_t a = 0; a < a_count; ++a)
      if (coin()) {
        inst.edges_ca.emplace_back(c, a);
        if (max_weight > 0) inst.w_ca.push_back(draw_weight(state, wmax));
      }
  return inst;
}

}  // namespace faultpath

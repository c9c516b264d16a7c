#include <algorithm>

#include "doctest.h"
#include "faultpath/oracle.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

TEST_CASE("dijkstra on the diamond") {
  WeightedGraph g = fptest::diamond();
  SpTree t = dijkstra(GraphView(g), 0);
  CHECK(t.dist[0].main() == 0);
  CHECK(t.dist[1].main() == 1);
  CHECK(t.dist[2].main() == 2);
  CHECK(t.dist[3].main() == 1);

  EdgeId removed[1] = {0};
  SpTree t2 = dijkstra(GraphView(g).without_edges(removed), 0);
  CHECK(t2.dist[1].main() == 5);
  CHECK(t2.dist[2].main() == 4);
}

TEST_CASE("dijkstra with isolated nodes") {
  WeightedGraph g(2, {}, 1, 0, 0, 1);
  SpTree t = dijkstra(GraphView(g), 0);
  CHECK(t.dist[1].is_infinite());
  CHECK(!t.reachable(1));
}

TEST_CASE("path extraction") {
  WeightedGraph g = fptest::diamond();
  SpTree t = dijkstra(GraphView(g), 0);
  PathOnTree p = extract_path(t, 2);
  CHECK(p.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(p.total().main() == 2);

  PathOnTree self = extract_path(t, 0);
  CHECK(self.nodes == std::vector<NodeId>{0});
  CHECK(self.hops() == 0);

  WeightedGraph c5 = fptest::c5();
  SpTree tc = dijkstra(GraphView(c5), 0);
  PathOnTree pc = extract_path(tc, 2);
  CHECK(pc.total().main() == 2);
  bool clockwise = pc.nodes == std::vector<NodeId>{0, 1, 2};
  bool counter = pc.nodes == std::vector<NodeId>{0, 4, 3, 2};
  CHECK(clockwise);
  CHECK(!counter);  // the two-hop arc always wins on length
}

TEST_CASE("subtree membership") {
  WeightedGraph g = fptest::p3();
  SpTree t = dijkstra(GraphView(g), 0);
  for (NodeId x = 0; x < 3; ++x) CHECK(t.in_subtree(0, x));
  CHECK(t.in_subtree(1, 2));
  CHECK(!t.in_subtree(2, 1));

  WeightedGraph two(2, {}, 1, 0, 0, 1);
  SpTree ti = dijkstra(GraphView(two), 0);
  CHECK(!ti.in_subtree(0, 1));  // unreachable
}

namespace {

WeightedGraph tree_graph(const std::vector<std::pair<NodeId, NodeId>>& edges, NodeId n) {
  std::vector<std::tuple<NodeId, NodeId, int64_t>> raw;
  for (auto [u, v] : edges) raw.emplace_back(u, v, 1);
  return WeightedGraph(n, std::move(raw), 1, 1, 0, n - 1);
}

}  // namespace

TEST_CASE("centroid split of small trees") {
  // Path on three nodes.
  WeightedGraph p = tree_graph({{0, 1}, {1, 2}}, 3);
  SpTree tp = dijkstra(GraphView(p), 0);
  CentroidSplit sp = centroid_split(tp, 0, {});
  CHECK(sp.centroid == 1);
  CHECK(sp.size_t1 == 2);
  CHECK(sp.size_t2 == 2);

  // Star with three leaves: the split bundles one leaf with the center.
  WeightedGraph star = tree_graph({{0, 1}, {0, 2}, {0, 3}}, 4);
  SpTree ts = dijkstra(GraphView(star), 0);
  CentroidSplit ss = centroid_split(ts, 0, {});
  CHECK(ss.centroid == 0);
  CHECK(std::min(ss.size_t1, ss.size_t2) == 2);
  CHECK(std::max(ss.size_t1, ss.size_t2) == 3);

  // Balanced binary tree on seven nodes: split at a child of the root.
  WeightedGraph b =
      tree_graph({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}, 7);
  SpTree tb = dijkstra(GraphView(b), 0);
  CentroidSplit sb = centroid_split(tb, 0, {});
  CHECK(sb.centroid == 1);  // heaviest-first walk reaches the smaller-id child
  CHECK(sb.size_t2 == 3);
  CHECK(sb.size_t1 == 5);
  // Exhaustive check: no single-node split does better than the bounds.
  for (int32_t sz : {sb.size_t1, sb.size_t2}) {
    CHECK(sz >= (7 + 2) / 3);
    CHECK(sz <= (2 * 7 + 2) / 3);
  }
}

TEST_CASE("centroid bounds on random trees") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    NodeId n = 3 + static_cast<NodeId>(seed % 38);
    WeightedGraph g = random_connected_graph(n, 0.0, 4, seed * 77);
    SpTree t = dijkstra(GraphView(g), g.source());
    if (static_cast<NodeId>(t.order.size()) < 3) continue;
    int32_t nn = static_cast<int32_t>(t.order.size());
    CentroidSplit s = centroid_split(t, g.source(), {});
    int32_t lo = (nn + 2) / 3, hi = (2 * nn + 2) / 3;
    CHECK(s.size_t1 >= lo);
    CHECK(s.size_t1 <= hi);
    CHECK(s.size_t2 >= lo);
    CHECK(s.size_t2 <= hi);
    // Parts overlap exactly in the centroid and partition the tree edges.
    int32_t overlap = 0;
    for (NodeId x = 0; x < n; ++x)
      if (s.in_t1[static_cast<size_t>(x)] && s.in_t2[static_cast<size_t>(x)]) {
        ++overlap;
        CHECK(x == s.centroid);
      }
    CHECK(overlap == 1);
    for (NodeId x : t.order) {
      if (x == g.source()) continue;
      NodeId p = t.parent[static_cast<size_t>(x)];
      bool in2 = s.in_t2[static_cast<size_t>(x)] && s.in_t2[static_cast<size_t>(p)];
      bool in1 = s.in_t1[static_cast<size_t>(x)] && s.in_t1[static_cast<size_t>(p)];
      CHECK((in1 || in2));
    }
  }
}

TEST_CASE("canonical paths: subpaths and removal consistency") {
  for (auto& spec : fptest::corpus_specs(15, 5, 25, 7)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    SpTree t = dijkstra(view, g.source());
    uint64_t state = spec.seed ^ 0xabcdef;
    for (int rep = 0; rep < 6; ++rep) {
      NodeId y = static_cast<NodeId>(splitmix64(state) % g.node_count());
      if (!t.reachable(y) || y == g.source()) continue;
      PathOnTree py = extract_path(t, y);
      // Subpath property: the prefix of the canonical path is canonical.
      size_t cut = splitmix64(state) % py.nodes.size();
      PathOnTree pz = extract_path(t, py.nodes[cut]);
      CHECK(std::equal(pz.nodes.begin(), pz.nodes.end(), py.nodes.begin()));
      // Removal consistency: an edge off the path does not change it.
      EdgeId e = static_cast<EdgeId>(splitmix64(state) % g.edge_count());
      std::vector<EdgeId> py_ids = py.edge_ids();
      if (std::find(py_ids.begin(), py_ids.end(), e) != py_ids.end()) continue;
      EdgeId removed[1] = {e};
      SpTree t2 = dijkstra(view.without_edges(removed), g.source());
      if (!t2.reachable(y)) continue;
      PathOnTree py2 = extract_path(t2, y);
      CHECK(py2.nodes == py.nodes);
    }
  }
}

TEST_CASE("disjoint subtrees across the two roots") {
  for (auto& spec : fptest::corpus_specs(15, 5, 30, 21)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId s = g.source(), t = g.target();
    SpTree from_s = dijkstra(view, s);
    if (!from_s.reachable(t)) continue;
    SpTree from_t = dijkstra(view, t);
    PathOnTree path = extract_path(from_s, t);
    for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      NodeId u = path.nodes[i], v = path.nodes[i + 1];
      for (NodeId x = 0; x < g.node_count(); ++x) {
        bool below_v = from_s.in_subtree(v, x);
        bool below_u = from_t.in_subtree(u, x);
        CHECK(!(below_v && below_u));
        if (below_v && from_t.reachable(x)) {
          // Removing the path edge leaves the x-to-t path untouched.
          EdgeId removed[1] = {path.links[i].link};
          SpTree t2 = dijkstra(view.without_edges(removed), t);
          PathOnTree a = extract_path(from_t, x);
          PathOnTree b = extract_path(t2, x);
          CHECK(a.nodes == b.nodes);
        }
      }
    }
  }
}

TEST_CASE("path decomposition through a disjoint fault set") {
  for (auto& spec : fptest::corpus_specs(20, 5, 16, 33)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId s = g.source(), t = g.target();
    SpTree from_s = dijkstra(view, s);
    if (!from_s.reachable(t)) continue;
    uint64_t state = spec.seed ^ 0x1111;
    // Pick tree edges with pairwise disjoint subtrees, one of them above t.
    std::vector<EdgeId> fault;
    std::vector<NodeId> roots;
    for (int rep = 0; rep < 10 && fault.size() < 3; ++rep) {
      NodeId x = static_cast<NodeId>(splitmix64(state) % g.node_count());
      if (!from_s.reachable(x) || x == s) continue;
      bool clash = false;
      for (NodeId r : roots)
        if (from_s.in_subtree(r, x) || from_s.in_subtree(x, r)) clash = true;
      if (clash) continue;
      roots.push_back(x);
      fault.push_back(from_s.parent_link[static_cast<size_t>(x)]);
    }
    bool covers_t = false;
    for (NodeId r : roots)
      if (from_s.in_subtree(r, t)) covers_t = true;
    if (!covers_t || fault.empty()) continue;

    SpTree cut = dijkstra(view.without_edges(fault), s);
    if (!cut.reachable(t)) continue;
    PathOnTree p = extract_path(cut, t);
    auto in_s_set = [&](NodeId x) {
      for (NodeId r : roots)
        if (from_s.in_subtree(r, x)) return true;
      return false;
    };
    // The last entry point into the fault subtrees splits the path into a
    // canonical prefix, one crossing edge, and a suffix inside the set.
    size_t entry = p.nodes.size();
    for (size_t i = p.nodes.size(); i-- > 0;) {
      if (!in_s_set(p.nodes[i])) {
        entry = i;
        break;
      }
    }
    REQUIRE(entry + 1 < p.nodes.size());
    NodeId x = p.nodes[entry];
    CHECK(std::find(fault.begin(), fault.end(), p.links[entry].link) == fault.end());
    PathOnTree canon = extract_path(from_s, x);
    CHECK(std::equal(canon.nodes.begin(), canon.nodes.end(), p.nodes.begin()));
    for (size_t i = entry + 1; i < p.nodes.size(); ++i) CHECK(in_s_set(p.nodes[i]));
  }
}

#include "doctest.h"
#include "faultpath/frp2_onpath.hpp"
#include "faultpath/oracle.hpp"
#include "faultpath/rp_sweep.hpp"
#include "faultpath/validation.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

TEST_CASE("divide: degenerate and disjointness") {
  {
    WeightedGraph g = fptest::p3();  // s - u - t
    GraphView view(g);
    SpTree fs = dijkstra(view, 0), ft = dijkstra(view, 2);
    PathOnTree path = extract_path(fs, 2);
    ShortcutWeights ws = ShortcutWeights::all_infinite(0, 3);
    ShortcutWeights wt = ShortcutWeights::all_infinite(2, 3);
    PartitionPair parts = both_divide(view, fs, ft, path.nodes, 0, ws, wt);
    CHECK(parts.in_a == std::vector<uint8_t>{1, 0, 0});  // A = {s}
  }
  {
    WeightedGraph g = fptest::route_diamond();
    GraphView view(g);
    SpTree fs = dijkstra(view, 0), ft = dijkstra(view, 2);
    PathOnTree path = extract_path(fs, 2);
    ShortcutWeights ws = ShortcutWeights::all_infinite(0, 4);
    ShortcutWeights wt = ShortcutWeights::all_infinite(2, 4);
    ScopedValidation v(true);  // asserts V(A) and V(B) disjoint
    PartitionPair parts = both_divide(view, fs, ft, path.nodes, 0, ws, wt);
    for (size_t i = 0; i < 4; ++i) CHECK(!(parts.in_a[i] && parts.in_b[i]));
  }
}

TEST_CASE("divide: split identity against the materialized oracle") {
  ScopedValidation v(true);
  size_t done = 0;
  for (auto& spec : fptest::corpus_specs(300, 5, 24, 909)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId s = g.source(), t = g.target();
    SpTree fs = dijkstra(view, s);
    if (!fs.reachable(t)) continue;
    SpTree ft = dijkstra(view, t);
    PathOnTree path = extract_path(fs, t);
    if (path.hops() < 2) continue;
    uint64_t state = spec.seed ^ 0xf00d;
    size_t fi = splitmix64(state) % (path.hops() - 1);  // a = nodes[fi], prefix nonempty
    if (fi == 0) continue;
    ShortcutWeights ws = fptest::random_valid_shortcuts(view, s, spec.seed ^ 5);
    ShortcutWeights wt = fptest::random_valid_shortcuts(view, t, spec.seed ^ 6);
    PartitionPair parts = both_divide(view, fs, ft, path.nodes, fi, ws, wt);
    NodeId a = path.nodes[fi];

    OracleGraph big(view.with_hub(ws).with_hub(wt));
    OracleGraph small(view.induced(parts.in_a).with_hub(parts.a_near).with_hub(parts.a_far));
    ExtDist offset = ft.dist[static_cast<size_t>(a)];
    std::vector<EdgeId> ids = path.edge_ids();
    for (size_t i = 0; i < fi; ++i) {
      for (size_t j = i; j < fi; ++j) {
        EdgeId removed[2] = {ids[i], ids[j]};
        ExtDist want = big.dist_without(s, removed)[static_cast<size_t>(t)];
        ExtDist got =
            small.dist_without(s, removed)[static_cast<size_t>(a)] + offset;
        CHECK(same_value(got, want));
      }
    }
    if (++done >= 60) break;
  }
  CHECK(done >= 40);
}

TEST_CASE("conquer on the route diamond") {
  WeightedGraph g = fptest::route_diamond();
  GraphView view(g);
  ScopedValidation v(true);
  OnPathTable table = solve_onpath(view, 0, 2, naive_solver());
  REQUIRE(table.size() == 2);
  CHECK(table.at(0, 1).main() == 4);  // both path edges gone: the long arc
  CHECK(table.at(1, 0).main() == 4);
}

TEST_CASE("on-path table: trivial shapes") {
  {
    WeightedGraph g = parse_graph("2 1 0 1\n0 1 1\n");
    OnPathTable t = solve_onpath(GraphView(g), 0, 1, naive_solver());
    REQUIRE(t.size() == 1);
    CHECK(t.at(0, 0).is_infinite());
  }
  {
    WeightedGraph g = fptest::p3();
    OnPathTable t = solve_onpath(GraphView(g), 0, 2, naive_solver());
    REQUIRE(t.size() == 2);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) CHECK(t.at(i, j).is_infinite());
  }
}

TEST_CASE("on-path table equals the brute oracle") {
  ScopedValidation v(true);
  size_t done = 0;
  for (auto& spec : fptest::corpus_specs(400, 5, 35, 31337)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId s = g.source(), t = g.target();
    SpTree fs = dijkstra(view, s);
    if (!fs.reachable(t)) continue;
    OnPathTable table = solve_onpath(view, s, t, naive_solver());
    Brute2Frp b2(view, s, t);
    for (size_t i = 0; i < table.size(); ++i) {
      for (size_t j = 0; j < table.size(); ++j) {
        ExtDist want = b2.query(table.path_edges[i], table.path_edges[j]);
        CHECK(same_value(table.at(i, j), want));
        CHECK(same_value(table.at(i, j), table.at(j, i)));
      }
    }
    if (++done >= 300) break;
  }
  CHECK(done >= 200);
}

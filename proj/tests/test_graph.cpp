#include <set>

#include "doctest.h"
#include "faultpath/oracle.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

TEST_CASE("ext_add componentwise with saturation") {
  ExtDist a = ExtDist::finite(2, 5), b = ExtDist::finite(3, 7);
  CHECK(ext_add(a, b) == ExtDist::finite(5, 12));
  CHECK(ext_add(a, ExtDist::infinity()).is_infinite());
  CHECK(ext_add(ExtDist::infinity(), ExtDist::infinity()).is_infinite());
}

TEST_CASE("ext dist ordering and virtual bias") {
  CHECK(ExtDist::finite(2, 9) < ExtDist::finite(3, 0));
  CHECK(ExtDist::finite(2, 1) < ExtDist::finite(2, 2));
  ExtDist v = ExtDist::finite(2, 2).through_virtual();
  CHECK(ExtDist::finite(2, 2) < v);
  CHECK(v < ExtDist::finite(2, 3));
  CHECK(ExtDist::finite(5, 1) - ExtDist::finite(2, 3) == ExtDist::finite(3, -2));
}

TEST_CASE("parse echoes the input graph") {
  WeightedGraph g = fptest::diamond();
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.source() == 0);
  CHECK(g.target() == 3);
  CHECK(g.edge(3).u == 2);
  CHECK(g.edge(3).v == 3);
  CHECK(g.edge(3).weight == 3);
  CHECK(g.denominator() == 1);
}

TEST_CASE("decimal weights scale to the least common denominator") {
  WeightedGraph g = parse_graph("3 3 0 2\n0 1 1.5\n1 2 1\n0 2 1\n");
  CHECK(g.denominator() == 2);
  CHECK(g.edge(0).weight == 3);
  CHECK(g.edge(1).weight == 2);
  CHECK(g.edge(2).weight == 2);
}

TEST_CASE("quotient weights parse exactly") {
  WeightedGraph g = parse_graph("2 1 0 1\n0 1 4/3\n");
  CHECK(g.denominator() == 3);
  CHECK(g.edge(0).weight == 4);
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse_graph("2 1 0 1\n0 0 1\n"), ParseError);       // self-loop
  CHECK_THROWS_AS(parse_graph("2 2 0 1\n0 1 1\n1 0 2\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_graph("2 1 0 1\n0 1 0\n"), ParseError);       // non-positive
  CHECK_THROWS_AS(parse_graph("2 1 0 1\n0 7 1\n"), ParseError);       // out of range
  CHECK_THROWS_AS(parse_graph("2 1 0 1\n0 1\n"), ParseError);         // malformed
}

TEST_CASE("edge removal views") {
  WeightedGraph g = fptest::diamond();
  GraphView base(g);
  EdgeId removed[1] = {0};  // {0,1}
  GraphView v = base.without_edges(removed);
  std::set<NodeId> nbrs;
  v.for_neighbors(0, [&](NodeId x, EdgeId, const ExtDist&) { nbrs.insert(x); });
  CHECK(nbrs == std::set<NodeId>{3});

  // Removing nothing keeps the iteration identical.
  std::vector<std::pair<NodeId, EdgeId>> a, b;
  base.for_neighbors(2, [&](NodeId x, EdgeId e, const ExtDist&) { a.emplace_back(x, e); });
  base.without_edges({}).for_neighbors(
      2, [&](NodeId x, EdgeId e, const ExtDist&) { b.emplace_back(x, e); });
  CHECK(a == b);

  // Isolating a node leaves everything else unreachable from it.
  EdgeId all0[2] = {0, 2};
  SpTree t = dijkstra(base.without_edges(all0), 0);
  CHECK(t.dist[1].is_infinite());
  CHECK(t.dist[2].is_infinite());
  CHECK(t.dist[3].is_infinite());
}

TEST_CASE("serialize round trip") {
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    WeightedGraph g = random_connected_graph(12, 0.3, 9, seed);
    WeightedGraph h = parse_graph(g.serialize());
    CHECK(h.serialize() == g.serialize());
    CHECK(h.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(h.edge(e).u == g.edge(e).u);
      CHECK(h.edge(e).v == g.edge(e).v);
      CHECK(h.edge(e).weight == g.edge(e).weight);
      CHECK(h.edge(e).key == g.edge(e).key);
    }
  }
  WeightedGraph r = parse_graph("3 2 0 2\n0 1 5/6\n1 2 1/4\n");
  WeightedGraph r2 = parse_graph(r.serialize());
  CHECK(r2.denominator() == r.denominator());
  CHECK(r2.serialize() == r.serialize());
}

TEST_CASE("tiebreak keys pairwise distinct") {
  for (uint64_t seed : {0ull, 7ull, 99ull}) {
    WeightedGraph g = random_connected_graph(10, 0.5, 5, seed);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (EdgeId f = e + 1; f < g.edge_count(); ++f)
        CHECK((g.edge(e).key ^ g.edge(f).key) != 0);
  }
}

TEST_CASE("view removal agrees with a materialized copy") {
  for (auto& spec : fptest::corpus_specs(12, 5, 18, 42)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView base(g);
    uint64_t state = spec.seed;
    std::vector<EdgeId> removed;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (splitmix64(state) % 4 == 0) removed.push_back(e);
    GraphView v = base.without_edges(removed);
    OracleGraph og(base);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      SpTree t = dijkstra(v, s);
      std::vector<ExtDist> ref = og.dist_without(s, removed);
      for (NodeId x = 0; x < g.node_count(); ++x)
        CHECK(t.dist[static_cast<size_t>(x)] == ref[static_cast<size_t>(x)]);
    }
  }
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(25, 2) == "12.5");
  CHECK(format_rational(4, 2) == "2");
  CHECK(format_rational(4, 3) == "4/3");
  CHECK(format_rational(1, 8) == "0.125");
}

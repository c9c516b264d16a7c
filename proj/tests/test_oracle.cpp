#include "doctest.h"
#include "faultpath/oracle.hpp"
#include "faultpath/gadget.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

TEST_CASE("dijkstra agrees with exhaustive path enumeration on tiny graphs") {
  for (auto& spec : fptest::corpus_specs(16, 3, 8, 5)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    uint64_t state = spec.seed;
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<EdgeId> removed;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (splitmix64(state) % 5 == 0) removed.push_back(e);
      GraphView v = view.without_edges(removed);
      SpTree t = dijkstra(v, g.source());
      OracleGraph og(view);
      auto od = og.dist_without(g.source(), removed);
      for (NodeId x = 0; x < g.node_count(); ++x) {
        ExtDist byenum = enumerate_paths_dist(v, g.source(), x);
        CHECK(t.dist[static_cast<size_t>(x)] == byenum);
        CHECK(od[static_cast<size_t>(x)] == byenum);
      }
    }
  }
}

TEST_CASE("brute replacement paths on fixtures") {
  WeightedGraph g = fptest::route_diamond();
  BruteRp rp = brute_rp(GraphView(g), 0, 2);
  REQUIRE(rp.path_edges.size() == 2);
  CHECK(rp.dist[0].main() == 4);
  CHECK(rp.dist[1].main() == 4);

  WeightedGraph p = fptest::p3();
  BruteRp rp2 = brute_rp(GraphView(p), 0, 2);
  REQUIRE(rp2.path_edges.size() == 2);
  CHECK(rp2.dist[0].is_infinite());
  CHECK(rp2.dist[1].is_infinite());
}

TEST_CASE("brute dual faults: diamond pairs") {
  WeightedGraph g = fptest::route_diamond();
  Brute2Frp b(GraphView(g), 0, 2);
  EdgeId su = 0, ut = 1, sx = 2, xt = 3;
  CHECK(b.query(su, ut).main() == 4);
  CHECK(b.query(su, xt).is_infinite());
  CHECK(b.query(xt, sx).main() == 2);  // neither on the path
  CHECK(b.query(su, su).main() == 4);
  CHECK(b.nofault().main() == 2);
}

TEST_CASE("brute triangle flags") {
  TriangleInstance inst;
  inst.a_count = 1;
  inst.bc_count = 2;
  inst.edges_ab = {{0, 0}};
  inst.edges_bc = {{0, 0}};
  inst.edges_ca = {{0, 0}};
  auto r = brute_triangle(inst);
  CHECK(r.exists[0] == 1);

  TriangleInstance empty;
  empty.a_count = 2;
  empty.bc_count = 3;
  auto r2 = brute_triangle(empty);
  CHECK(r2.exists[0] == 0);
  CHECK(r2.exists[1] == 0);

  TriangleInstance w;
  w.a_count = 1;
  w.bc_count = 2;
  w.max_weight = 9;
  w.edges_ab = {{0, 0}, {0, 1}};
  w.w_ab = {1, 1};
  w.edges_bc = {{0, 0}, {1, 1}};
  w.w_bc = {1, 3};
  w.edges_ca = {{0, 0}, {1, 0}};
  w.w_ca = {1, 1};
  auto r3 = brute_triangle(w);
  CHECK(r3.exists[0] == 1);
  CHECK(r3.min_sum[0] == 3);  // two triangles with sums 3 and 5
}

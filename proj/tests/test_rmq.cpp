#include "doctest.h"
#include "faultpath/rmq.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

namespace {

std::vector<ExtDist> random_values(size_t n, uint64_t seed) {
  std::vector<ExtDist> v;
  uint64_t state = seed;
  for (size_t i = 0; i < n; ++i)
    v.push_back(ExtDist::finite(static_cast<int64_t>(splitmix64(state) % 1000),
                                static_cast<int64_t>(splitmix64(state) % 100000)));
  return v;
}

std::pair<ExtDist, size_t> scan_min(const std::vector<ExtDist>& v, size_t a, size_t b) {
  ExtDist best = ExtDist::infinity();
  size_t arg = a;
  for (size_t i = a; i < b; ++i)
    if (v[i] < best) {
      best = v[i];
      arg = i;
    }
  return {best, arg};
}

}  // namespace

TEST_CASE("range minimum basics") {
  RangeMin r({ExtDist::finite(3, 0), ExtDist::finite(1, 0), ExtDist::finite(2, 0)});
  auto [v, i] = r.query(0, 3);
  CHECK(v == ExtDist::finite(1, 0));
  CHECK(i == 1);

  RangeMin single({ExtDist::finite(5, 0)});
  auto [v1, i1] = single.query(0, 1);
  CHECK(v1 == ExtDist::finite(5, 0));
  CHECK(i1 == 0);

  CHECK_THROWS(RangeMin({}));
  CHECK_THROWS(r.query(2, 2));
  CHECK_THROWS(r.query(2, 1));
}

TEST_CASE("range minimum matches linear scans") {
  auto vals = random_values(1000, 5);
  RangeMin r(vals);
  uint64_t state = 99;
  for (int rep = 0; rep < 5000; ++rep) {
    size_t a = splitmix64(state) % vals.size();
    size_t b = a + 1 + splitmix64(state) % (vals.size() - a);
    auto got = r.query(a, b);
    auto want = scan_min(vals, a, b);
    CHECK(got.first == want.first);
    CHECK(got.second == want.second);
  }
}

TEST_CASE("build is pure") {
  auto vals = random_values(257, 8);
  RangeMin a(vals), b(vals);
  uint64_t state = 3;
  for (int rep = 0; rep < 200; ++rep) {
    size_t lo = splitmix64(state) % vals.size();
    size_t hi = lo + 1 + splitmix64(state) % (vals.size() - lo);
    CHECK(a.query(lo, hi) == b.query(lo, hi));
  }
}

TEST_CASE("tree range minimum over subtrees") {
  WeightedGraph p = fptest::p3();
  SpTree t = dijkstra(GraphView(p), 0);
  std::vector<ExtDist> vals = {ExtDist::finite(7, 0), ExtDist::finite(4, 0),
                               ExtDist::finite(9, 0)};
  TreeRangeMin trm(t, vals);
  auto [v, node] = trm.query(IntervalSet::subtree(t, 0));
  CHECK(v == ExtDist::finite(4, 0));
  CHECK(node == 1);

  // Subtree minus subtree equals a scan over the difference.
  auto diff = IntervalSet::subtree(t, 0).minus(IntervalSet::subtree(t, 1));
  auto [vd, nd] = trm.query(diff);
  CHECK(vd == ExtDist::finite(7, 0));
  CHECK(nd == 0);

  // Intersection of disjoint subtrees is empty.
  auto none = IntervalSet::subtree(t, 1).intersect(IntervalSet::subtree(t, 0).minus(
      IntervalSet::subtree(t, 1)));
  auto [vi, ni] = trm.query(none);
  CHECK(vi.is_infinite());
  CHECK(ni == kNoNode);
}

TEST_CASE("tree set expressions match scans") {
  for (auto& spec : fptest::corpus_specs(8, 6, 30, 17)) {
    WeightedGraph g = fptest::make_graph(spec);
    SpTree t = dijkstra(GraphView(g), g.source());
    auto vals = random_values(static_cast<size_t>(g.node_count()), spec.seed);
    TreeRangeMin trm(t, vals);
    uint64_t state = spec.seed ^ 0x77;
    for (int rep = 0; rep < 300; ++rep) {
      NodeId a = static_cast<NodeId>(splitmix64(state) % g.node_count());
      NodeId b = static_cast<NodeId>(splitmix64(state) % g.node_count());
      if (!t.reachable(a) || !t.reachable(b)) continue;
      IntervalSet set;
      int mode = static_cast<int>(splitmix64(state) % 3);
      if (mode == 0) set = IntervalSet::subtree(t, a);
      else if (mode == 1) set = IntervalSet::subtree(t, a).minus(IntervalSet::subtree(t, b));
      else set = IntervalSet::subtree(t, a).intersect(IntervalSet::subtree(t, b));
      auto got = trm.query(set);
      ExtDist want = ExtDist::infinity();
      for (NodeId x : t.order) {
        bool in_a = t.in_subtree(a, x), in_b = t.in_subtree(b, x);
        bool member = mode == 0 ? in_a : (mode == 1 ? in_a && !in_b : in_a && in_b);
        if (member) want = min(want, vals[static_cast<size_t>(x)]);
      }
      CHECK(got.first == want);
    }
  }
}

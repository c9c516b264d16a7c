#include <unordered_set>

#include "doctest.h"
#include "faultpath/oracle.hpp"
#include "faultpath/ssrp.hpp"
#include "faultpath/validation.hpp"
#include "support/fixtures.hpp"

using namespace faultpath;

namespace {

// Entrywise check of a solver table against per-fault Dijkstra over the
// materialized view (virtual edges expanded), across all real edges.
void check_table(const GraphView& aug_view, const GraphView& solver_view, NodeId src,
                 const SsrpTable& got) {
  OracleGraph og(aug_view);
  SpTree tree = dijkstra(aug_view, src);
  auto base = og.dist_without(src, {});
  for (NodeId x = 0; x < aug_view.node_count(); ++x)
    CHECK(same_value(got.nofault[static_cast<size_t>(x)], base[static_cast<size_t>(x)]));
  for (EdgeId e = 0; e < aug_view.graph().edge_count(); ++e) {
    if (!aug_view.edge_in(e)) continue;
    EdgeId removed[1] = {e};
    auto want = og.dist_without(src, removed);
    for (NodeId x = 0; x < aug_view.node_count(); ++x) {
      if (!aug_view.node_in(x)) continue;
      CHECK(same_value(got.query(e, x), want[static_cast<size_t>(x)]));
      // Monotonicity and no-fault agreement.
      CHECK(!value_less(got.query(e, x), got.nofault[static_cast<size_t>(x)]));
    }
    (void)solver_view;
    (void)tree;
  }
}

}  // namespace

TEST_CASE("naive table on fixtures") {
  WeightedGraph g = fptest::diamond();
  SsrpTable table = ssrp_naive(GraphView(g), 0);
  CHECK(table.query(0, 2).main() == 4);  // drop {0,1}

  WeightedGraph p = fptest::p3();
  SsrpTable tp = ssrp_naive(GraphView(p), 0);
  CHECK(tp.query(0, 1).is_infinite());
  CHECK(tp.query(0, 2).is_infinite());
}

TEST_CASE("naive table equals per-fault oracle") {
  for (auto& spec : fptest::corpus_specs(50, 5, 20, 81)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    for (NodeId src : {g.source(), g.target()})
      check_table(view, view, src, ssrp_naive(view, src));
  }
}

TEST_CASE("shortcut solver on the diamond") {
  WeightedGraph g = fptest::diamond();
  GraphView view(g);
  ShortcutWeights w = ShortcutWeights::all_infinite(0, 4);
  w.weight[2] = ExtDist::finite(3, 0);
  ScopedValidation v(true);
  SsrpTable table = ssrp_shortcut(view, 0, w, naive_solver());
  CHECK(table.query(0, 2).main() == 3);  // min(4, shortcut 3)
}

TEST_CASE("vacuous augmentation equals the naive table") {
  for (auto& spec : fptest::corpus_specs(10, 4, 16, 3)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    ShortcutWeights w = ShortcutWeights::all_infinite(g.source(), g.node_count());
    SsrpTable a = ssrp_shortcut(view, g.source(), w, naive_solver());
    SsrpTable b = ssrp_naive(view, g.source());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (NodeId x = 0; x < g.node_count(); ++x) CHECK(same_value(a.query(e, x), b.query(e, x)));
  }
}

TEST_CASE("shortcut solver equals the materialized oracle") {
  ScopedValidation v(true);
  size_t done = 0;
  for (auto& spec : fptest::corpus_specs(220, 5, 30, 1234)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId src = g.source();
    ShortcutWeights w = fptest::random_valid_shortcuts(view, src, spec.seed);
    SsrpTable got = ssrp_shortcut(view, src, w, naive_solver());
    check_table(view.with_hub(w), view, src, got);
    ++done;
  }
  CHECK(done >= 200);
}

TEST_CASE("solver contract interchangeability") {
  SsrpSolver oracle_solver = [](const GraphView& g, NodeId s,
                                const std::vector<EdgeId>* rows) {
    SsrpTable t = brute_ssrp(g, s);
    if (rows != nullptr) {
      std::unordered_set<EdgeId> keep(rows->begin(), rows->end());
      std::erase_if(t.rows, [&](const auto& kv) { return !keep.contains(kv.first); });
    }
    return t;
  };
  for (auto& spec : fptest::corpus_specs(8, 5, 18, 55)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    ShortcutWeights w = fptest::random_valid_shortcuts(view, g.source(), spec.seed);
    SsrpTable a = ssrp_shortcut(view, g.source(), w, naive_solver());
    SsrpTable b = ssrp_shortcut(view, g.source(), w, oracle_solver);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (NodeId x = 0; x < g.node_count(); ++x) CHECK(same_value(a.query(e, x), b.query(e, x)));
  }
}

TEST_CASE("restricted solver: degenerate and folded cases") {
  ScopedValidation v(true);
  for (auto& spec : fptest::corpus_specs(12, 5, 18, 99)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId src = g.source();
    // Valid weights: every node is reachable without virtual edges, so the
    // restricted output matches the full solver on all (x, e).
    ShortcutWeights w = fptest::random_valid_shortcuts(view, src, spec.seed);
    std::vector<NodeId> xs;
    for (NodeId x = 0; x < g.node_count(); ++x) xs.push_back(x);
    std::vector<EdgeId> fs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) fs.push_back(e);
    RestrictedSsrp got = ssrp_shortcut_restricted(view, src, w, xs, fs, naive_solver());
    SsrpTable full = ssrp_shortcut(view, src, w, naive_solver());
    for (size_t ei = 0; ei < fs.size(); ++ei)
      for (size_t xi = 0; xi < xs.size(); ++xi)
        CHECK(same_value(got.at(ei, xi), full.query(fs[ei], xs[xi])));
  }
}

TEST_CASE("restricted solver on split instances") {
  // Instances shaped like the conquer step: remove a path suffix, keep the
  // source-side hub weights, ask for suffix nodes by prefix edges.
  ScopedValidation v(true);
  size_t done = 0;
  for (auto& spec : fptest::corpus_specs(300, 5, 26, 4321)) {
    WeightedGraph g = fptest::make_graph(spec);
    GraphView view(g);
    NodeId s = g.source(), t = g.target();
    SpTree from_s = dijkstra(view, s);
    if (!from_s.reachable(t)) continue;
    PathOnTree path = extract_path(from_s, t);
    if (path.hops() < 2) continue;
    size_t c = path.hops() / 2;
    std::vector<EdgeId> ids = path.edge_ids();
    std::vector<EdgeId> left(ids.begin(), ids.begin() + static_cast<long>(c));
    std::vector<EdgeId> right(ids.begin() + static_cast<long>(c), ids.end());
    GraphView lview = view.without_edges(right);
    ShortcutWeights w = fptest::random_valid_shortcuts(view, s, spec.seed ^ 1);
    std::vector<NodeId> xs(path.nodes.begin() + static_cast<long>(c), path.nodes.end());
    RestrictedSsrp got = ssrp_shortcut_restricted(lview, s, w, xs, left, naive_solver());

    OracleGraph og(lview.with_hub(w));
    for (size_t ei = 0; ei < left.size(); ++ei) {
      EdgeId removed[1] = {left[ei]};
      auto want = og.dist_without(s, removed);
      for (size_t xi = 0; xi < xs.size(); ++xi)
        CHECK(same_value(got.at(ei, xi), want[static_cast<size_t>(xs[xi])]));
    }
    if (++done >= 200) break;
  }
  CHECK(done >= 100);
}

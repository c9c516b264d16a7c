#include <benchmark/benchmark.h>

#include "faultpath/frp2.hpp"
#include "faultpath/generate.hpp"
#include "faultpath/rp_sweep.hpp"

using namespace faultpath;

namespace {

void BM_SsrpNaive(benchmark::State& state) {
  WeightedGraph g = random_sparse_graph(static_cast<NodeId>(state.range(0)), 4.0, 10, 3);
  GraphView view(g);
  for (auto _ : state) {
    SsrpTable t = ssrp_naive(view, g.source());
    benchmark::DoNotOptimize(t.rows.size());
  }
}
BENCHMARK(BM_SsrpNaive)->Arg(128)->Arg(512);

void BM_SsrpShortcut(benchmark::State& state) {
  WeightedGraph g = random_sparse_graph(static_cast<NodeId>(state.range(0)), 4.0, 10, 4);
  GraphView view(g);
  ShortcutWeights w = ShortcutWeights::all_infinite(g.source(), g.node_count());
  for (auto _ : state) {
    SsrpTable t = ssrp_shortcut(view, g.source(), w, naive_solver());
    benchmark::DoNotOptimize(t.rows.size());
  }
}
BENCHMARK(BM_SsrpShortcut)->Arg(128)->Arg(512);

void BM_RpSweep(benchmark::State& state) {
  WeightedGraph g = random_sparse_graph(static_cast<NodeId>(state.range(0)), 4.0, 10, 5);
  GraphView view(g);
  SpTree fs = dijkstra(view, g.source());
  SpTree ft = dijkstra(view, g.target());
  SsrpTable far = ssrp_naive(view, g.target());
  for (auto _ : state) {
    RpResult rp = rp_sweep(view, g.source(), g.target(), fs, ft, far);
    benchmark::DoNotOptimize(rp.dist.size());
  }
}
BENCHMARK(BM_RpSweep)->Arg(512)->Arg(2048);

void BM_Solve2Frp(benchmark::State& state) {
  WeightedGraph g = random_sparse_graph(static_cast<NodeId>(state.range(0)), 4.0, 10, 6);
  GraphView view(g);
  for (auto _ : state) {
    Frp2Table t = solve_2frp(view, g.source(), g.target());
    benchmark::DoNotOptimize(t.pair_values.size());
  }
}
BENCHMARK(BM_Solve2Frp)->Unit(benchmark::kMillisecond)->Arg(64)->Arg(200)->Arg(500);

}  // namespace

#include <benchmark/benchmark.h>

#include "faultpath/generate.hpp"
#include "faultpath/rmq.hpp"
#include "faultpath/sp_tree.hpp"

using namespace faultpath;

namespace {

WeightedGraph bench_graph(int64_t n) { return random_sparse_graph(static_cast<NodeId>(n), 4.0, 10, 99); }

void BM_Dijkstra(benchmark::State& state) {
  WeightedGraph g = bench_graph(state.range(0));
  GraphView view(g);
  for (auto _ : state) {
    SpTree t = dijkstra(view, g.source());
    benchmark::DoNotOptimize(t.dist.data());
  }
}
BENCHMARK(BM_Dijkstra)->Arg(256)->Arg(1024)->Arg(4096);

void BM_RangeMinQuery(benchmark::State& state) {
  uint64_t rng = 5;
  size_t n = static_cast<size_t>(state.range(0));
  std::vector<ExtDist> vals;
  for (size_t i = 0; i < n; ++i)
    vals.push_back(ExtDist::finite(static_cast<int64_t>(splitmix64(rng) % 100000),
                                   static_cast<int64_t>(splitmix64(rng))));
  RangeMin rm(vals);
  size_t a = 0;
  for (auto _ : state) {
    a = (a * 7 + 13) % (n - 1);
    auto r = rm.query(a, n);
    benchmark::DoNotOptimize(r.second);
  }
}
BENCHMARK(BM_RangeMinQuery)->Arg(1024)->Arg(65536);

void BM_CentroidSplit(benchmark::State& state) {
  WeightedGraph g = bench_graph(state.range(0));
  SpTree t = dijkstra(GraphView(g), g.source());
  for (auto _ : state) {
    CentroidSplit s = centroid_split(t, g.source(), {});
    benchmark::DoNotOptimize(s.centroid);
  }
}
BENCHMARK(BM_CentroidSplit)->Arg(1024)->Arg(8192);

}  // namespace

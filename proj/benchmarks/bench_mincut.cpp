#include <benchmark/benchmark.h>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/driver.hpp"
#include "dirmincut/generators.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/sparsifier.hpp"

namespace {

using namespace dirmincut;

void BM_Maxflow(benchmark::State& state) {
  SplitRng rng(7);
  const int n = static_cast<int>(state.range(0));
  WeightedDigraph g = gen_erdos(n, 8 * n, 32, rng);
  for (auto _ : state) {
    FlowResult f = max_flow(g, 0, n - 1);
    benchmark::DoNotOptimize(f.value);
  }
}
BENCHMARK(BM_Maxflow)->Arg(64)->Arg(256)->Arg(1024);

void BM_Sparsify(benchmark::State& state) {
  SplitRng rng(7);
  const int n = static_cast<int>(state.range(0));
  WeightedDigraph g = gen_erdos(n, 8 * n, 1 << 12, rng);
  for (auto _ : state) {
    SplitRng run_rng = rng.split();
    SparsifiedGraph sp =
        partial_sparsify(g, g.total_weight() / 4, 8, 0.25, run_rng,
                         SparsifyVariant::kRounding);
    benchmark::DoNotOptimize(sp.graph.edge_count());
  }
}
BENCHMARK(BM_Sparsify)->Arg(256)->Arg(1024);

void BM_Packing(benchmark::State& state) {
  SplitRng rng(7);
  const int n = static_cast<int>(state.range(0));
  PlantedCut planted = gen_planted_unbalanced(n, 4, 12, rng);
  SparsifiedGraph sp = partial_sparsify(planted.graph, 16, 8, 0.1, rng,
                                        SparsifyVariant::kRounding);
  for (auto _ : state) {
    Packing p = pack_arborescences(sp.graph);
    benchmark::DoNotOptimize(p.gamma_bar);
  }
}
BENCHMARK(BM_Packing)->Arg(64)->Arg(128);

void BM_ExactMincut(benchmark::State& state) {
  SplitRng rng(7);
  const int n = static_cast<int>(state.range(0));
  PlantedCut planted = gen_planted_unbalanced(n, 4, 12, rng);
  for (auto _ : state) {
    DriverConfig cfg;
    cfg.seed = 99;
    DriverStats stats;
    CutResult cut = exact_s_mincut(planted.graph, cfg, &stats);
    benchmark::DoNotOptimize(cut.value);
  }
}
BENCHMARK(BM_ExactMincut)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();

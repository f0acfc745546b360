#include <benchmark/benchmark.h>

#include "hfdiam/bfs.hpp"
#include "hfdiam/diameter.hpp"
#include "hfdiam/generator.hpp"
#include "hfdiam/oracle.hpp"
#include "hfdiam/twins.hpp"

namespace {

using hfdiam::Graph;

Graph star_instance(int n) {
  hfdiam::GenOptions options;
  options.attempts = 0;
  return hfdiam::generate_hfree(hfdiam::parse_h_spec("P2+2P1"), n, 0, options)
      .graph;
}

void BM_Bfs(benchmark::State& state) {
  const Graph g = star_instance(static_cast<int>(state.range(0)));
  hfdiam::BfsLayers layers;
  for (auto _ : state) {
    hfdiam::bfs_into(g, 1, layers);
    benchmark::DoNotOptimize(layers.eccentricity);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bfs)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_DiameterP2_2P1(benchmark::State& state) {
  const Graph g = star_instance(static_cast<int>(state.range(0)));
  const auto h = hfdiam::parse_h_spec("P2+2P1");
  for (auto _ : state) {
    auto out = hfdiam::dispatch(h, g);
    benchmark::DoNotOptimize(out.kind);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiameterP2_2P1)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 20)
    ->Complexity();

void BM_DmaxP4P1(benchmark::State& state) {
  const Graph g = star_instance(static_cast<int>(state.range(0)));
  const auto h = hfdiam::parse_h_spec("P4+P1");
  for (auto _ : state) {
    auto out = hfdiam::dispatch(h, g);
    benchmark::DoNotOptimize(out.kind);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DmaxP4P1)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 20)
    ->Complexity();

void BM_TrueTwinReduction(benchmark::State& state) {
  const Graph g = star_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto qm = hfdiam::reduce_true_twins(g);
    benchmark::DoNotOptimize(qm.reduced.vertex_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TrueTwinReduction)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 18)
    ->Complexity();

void BM_BruteDiameter(benchmark::State& state) {
  const Graph g = star_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = hfdiam::brute_diameter(g);
    benchmark::DoNotOptimize(r.diameter);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteDiameter)
    ->RangeMultiplier(4)
    ->Range(1 << 8, 1 << 13)
    ->Complexity();

}  // namespace

BENCHMARK_MAIN();

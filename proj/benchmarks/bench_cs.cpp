#include <benchmark/benchmark.h>

#include "gincs/combinatorics.hpp"
#include "gincs/models.hpp"
#include "gincs/multigrading.hpp"

using namespace gincs;

namespace {

void BM_CheckCsPath(benchmark::State& state) {
  const Ideal i = binomial_edge_ideal(Graph::path(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_cs(i, TermOrder::degrevlex(), 1, 1));
}
BENCHMARK(BM_CheckCsPath)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CheckCsObstruction(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Ideal i = hypergraph_minor_ideal(obstruction_hypergraph(3, t, 2 * t + 3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_cs(i, TermOrder::degrevlex(), 1, 1));
}
BENCHMARK(BM_CheckCsObstruction)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const Hypergraph h = obstruction_hypergraph(3, static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_hypergraph(h, 3));
}
BENCHMARK(BM_Classify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

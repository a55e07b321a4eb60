#include <benchmark/benchmark.h>

#include "gincs/graph.hpp"
#include "gincs/hilbert.hpp"
#include "gincs/models.hpp"

using namespace gincs;

namespace {

void BM_BuchbergerBinomialEdge(benchmark::State& state) {
  const Ideal i = binomial_edge_ideal(Graph::complete(static_cast<int>(state.range(0))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(i.gens(), TermOrder::degrevlex()));
}
BENCHMARK(BM_BuchbergerBinomialEdge)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MaximalMinors(benchmark::State& state) {
  const Ideal i = minors_ideal(3, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(initial_ideal(i, TermOrder::lex()));
}
BENCHMARK(BM_MaximalMinors)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_KPolynomial(benchmark::State& state) {
  const MonomialIdeal in =
      initial_ideal(binomial_edge_ideal(Graph::complete(static_cast<int>(state.range(0))), 3), TermOrder::degrevlex());
  for (auto _ : state) benchmark::DoNotOptimize(k_polynomial_monomial(in));
}
BENCHMARK(BM_KPolynomial)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

#include "feynkit/perturb.hpp"

#include <benchmark/benchmark.h>

using namespace feynkit;

static void BM_ContractionClasses(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_contraction_graphs({3}, state.range(0), 0));
}
BENCHMARK(BM_ContractionClasses)->Arg(2)->Arg(4);

static void BM_PartitionSeriesGraphs(benchmark::State& state) {
  RatMatrix m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  const SymmetricForm a(m);
  const auto u = Potential::from_monomials(2, {{{3, 0}, Rat(1)}, {{1, 2}, Rat(1, 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(partition_series_graphs(a, u, 3));
}
BENCHMARK(BM_PartitionSeriesGraphs);

static void BM_AutomorphismCount(benchmark::State& state) {
  const FeynmanGraph theta(0, {3, 3},
                           {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_count(theta));
}
BENCHMARK(BM_AutomorphismCount);

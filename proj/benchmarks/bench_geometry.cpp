#include "feynkit/cs_integrals.hpp"
#include "feynkit/conway.hpp"
#include "feynkit/projection.hpp"

#include <benchmark/benchmark.h>

using namespace feynkit;

static void BM_LinkingIntegral(benchmark::State& state) {
  const auto hopf = make_hopf_link(64);
  CsMcConfig cfg{.samples = static_cast<std::uint64_t>(state.range(0)), .seed = 3};
  for (auto _ : state) benchmark::DoNotOptimize(linking_integral(hopf, 0, 1, cfg));
}
BENCHMARK(BM_LinkingIntegral)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_CombinatorialLinking(benchmark::State& state) {
  const auto t24 = make_torus_link_2_4(96);
  for (auto _ : state) benchmark::DoNotOptimize(combinatorial_linking(t24, 0, 1));
}
BENCHMARK(BM_CombinatorialLinking)->Unit(benchmark::kMillisecond);

static void BM_ConwayTrefoil(benchmark::State& state) {
  const auto tre = make_trefoil(120);
  for (auto _ : state) benchmark::DoNotOptimize(conway_of_link(tre));
}
BENCHMARK(BM_ConwayTrefoil)->Unit(benchmark::kMillisecond);

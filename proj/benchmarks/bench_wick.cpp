#include "feynkit/grassmann.hpp"
#include "feynkit/wick.hpp"

#include <benchmark/benchmark.h>

using namespace feynkit;

namespace {

SymmetricForm dense_form(std::size_t d) {
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = (i == j) ? Rat(d + 1) : Rat(1);
  return SymmetricForm(m);
}

}  // namespace

static void BM_EnumeratePairings(benchmark::State& state) {
  const std::size_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairings(m));
}
BENCHMARK(BM_EnumeratePairings)->Arg(8)->Arg(10)->Arg(12);

static void BM_Moment(benchmark::State& state) {
  const SymmetricForm a = dense_form(3);
  MomentRequest req{{0, 1, 2, 0, 1, 2, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(moment(a, req));
}
BENCHMARK(BM_Moment);

static void BM_MomentRecursion(benchmark::State& state) {
  const SymmetricForm a = dense_form(3);
  MomentRequest req{{0, 1, 2, 0, 1, 2, 0, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(moment_via_recursion(a, req));
}
BENCHMARK(BM_MomentRecursion);

static void BM_BerezinDeterminant(benchmark::State& state) {
  const std::size_t l = state.range(0);
  RatMatrix lambda(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) lambda(i, j) = Rat((i * 7 + j * 3) % 5) - 2;
  for (auto _ : state) {
    const auto e = grassmann_exp(GrassmannPolynomial::ghost_quadratic(lambda));
    benchmark::DoNotOptimize(berezin_integral(e));
  }
}
BENCHMARK(BM_BerezinDeterminant)->Arg(3)->Arg(4);

BENCHMARK_MAIN();

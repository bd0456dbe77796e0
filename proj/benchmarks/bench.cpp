#include <benchmark/benchmark.h>

#include "epoly/epoly.hpp"
#include "epoly/fforacle/oracle.hpp"
#include "epoly/symfun.hpp"

using namespace epoly;

static void BM_EPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e_poly(n, SurfaceData(3, 2)));
}
BENCHMARK(BM_EPoly)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_GenFunctionCheck(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_function_check(N, SurfaceData(2, 2)));
}
BENCHMARK(BM_GenFunctionCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CoefficientTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c_d_via_genfun(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CoefficientTable)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_OracleSweep(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ff::Oracle o(2, q);
    benchmark::DoNotOptimize(ff::compare_with_formula(o, SurfaceData(2, 2)).equal);
  }
}
BENCHMARK(BM_OracleSweep)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>
#include "spinpoly/cyclotomic.hpp"

using spinpoly::CycNum;

static void BM_CycMultiply(benchmark::State& state) {
  const long N = state.range(0);
  CycNum a = CycNum::root_of_unity(N, 1) + CycNum::root_of_unity(N, 3) * spinpoly::rat(5, 7);
  CycNum b = CycNum::root_of_unity(N, 2) - CycNum(3);
  for (auto _ : state) {
    CycNum c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycMultiply)->Arg(8)->Arg(24)->Arg(120);

static void BM_CycInverse(benchmark::State& state) {
  const long N = state.range(0);
  CycNum a = CycNum::root_of_unity(N, 1) + CycNum(2);
  for (auto _ : state) {
    CycNum c = a.inverse();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycInverse)->Arg(8)->Arg(24)->Arg(120);

BENCHMARK_MAIN();

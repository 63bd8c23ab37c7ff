#include <benchmark/benchmark.h>

#include "lift/period.hpp"

namespace {

using namespace lift;

const Laurent& new4d() {
  static Laurent f = parse("vars: x,y,z,w; (1+x)^2/(x*y*w) + x/z + y + z + w");
  return f;
}

void BM_PeriodNaive(benchmark::State& state) {
  int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto seq = classical_period(new4d(), dmax, PeriodStrategy::naive);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_PeriodNaive)->Arg(6)->Arg(9)->Arg(12);

void BM_PeriodPruned(benchmark::State& state) {
  int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto seq = classical_period(new4d(), dmax, PeriodStrategy::pruned);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_PeriodPruned)->Arg(6)->Arg(9)->Arg(12);

void BM_SparseMul(benchmark::State& state) {
  Laurent f = new4d();
  Laurent g = f * f * f;
  for (auto _ : state) {
    auto h = g * f;
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_SparseMul);

}  // namespace

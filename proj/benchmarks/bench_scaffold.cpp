#include <benchmark/benchmark.h>

#include "lift/scaffold.hpp"

namespace {

using namespace lift;

void BM_EnumerateDp3(benchmark::State& state) {
  auto f = parse("(1+x+y)^3/(x*y)");
  BasisPartition p{2, {{0, 1}}, {}, std::nullopt};
  for (auto _ : state) {
    auto all = enumerate_scaffoldings(f, p, true);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_EnumerateDp3);

void BM_InvertNew4d(benchmark::State& state) {
  auto f = parse("vars: x,y,z,w; (1+x)^2/(x*y*w) + x/z + y + z + w");
  Scaffolding sc{{4, {{0}}, {1, 2, 3}, std::nullopt},
                 {Strut{{Int(2)}, {-1, -1, 0, -1}}, Strut{{Int(0)}, {1, 0, -1, 0}}},
                 {1, 2, 3},
                 0};
  for (auto _ : state) {
    auto rep = invert(f, sc);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_InvertNew4d);

}  // namespace

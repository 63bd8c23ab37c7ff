#include <benchmark/benchmark.h>

#include "lift/cone.hpp"
#include "lift/fan.hpp"
#include "lift/polytope.hpp"

namespace {

using namespace lift;

void BM_HullDilatedHexagon(benchmark::State& state) {
  auto f = parse("x + y + 1/x + 1/y + x/y + y/x");
  Polytope hexagon = newton_polytope(f);
  Int m = state.range(0);
  std::vector<IVec> points;
  for (const auto& p : hexagon.lattice_points()) {
    IVec q(p);
    for (auto& x : q) x *= m;
    points.push_back(std::move(q));
  }
  for (auto _ : state) {
    auto hull = Polytope::hull(points);
    benchmark::DoNotOptimize(hull);
  }
}
BENCHMARK(BM_HullDilatedHexagon)->Arg(1)->Arg(5);

void BM_SecondaryFan34(benchmark::State& state) {
  std::vector<IVec> d = {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)},
                         {Int(0), Int(0), Int(1)}, {Int(1), Int(1), Int(0)},
                         {Int(0), Int(0), Int(1)}, {Int(1), Int(1), Int(1)},
                         {Int(1), Int(0), Int(0)}};
  for (auto _ : state) {
    auto chambers = secondary_fan_chambers(d);
    benchmark::DoNotOptimize(chambers);
  }
}
BENCHMARK(BM_SecondaryFan34);

void BM_SpanningFan34(benchmark::State& state) {
  auto f = parse(
      "x + y^2/z + 2*y + 3*y/z + z + 3/z + z/y + 2/y + 1/(y*z) + y^2/(x*z) + 2*y/x + "
      "2*y/(x*z) + z/x + 2/x + 1/(x*z)");
  Polytope newt = newton_polytope(f);
  for (auto _ : state) {
    auto fan = spanning_fan(newt);
    benchmark::DoNotOptimize(fan);
  }
}
BENCHMARK(BM_SpanningFan34);

}  // namespace

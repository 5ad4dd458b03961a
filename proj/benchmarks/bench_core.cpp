#include <benchmark/benchmark.h>

#include "sidedisk/extremal.hpp"
#include "sidedisk/lemma_oracles.hpp"

namespace {

using namespace sidedisk;

const Tolerance kTol;

void BM_SideDisks(benchmark::State& state) {
  const auto poly = random_polygon(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(side_disks(poly));
  }
}
BENCHMARK(BM_SideDisks)->Arg(8)->Arg(64)->Arg(512);

void BM_Analyze(benchmark::State& state) {
  const auto poly = random_polygon(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(poly, kTol));
  }
}
BENCHMARK(BM_Analyze)->Arg(8)->Arg(32)->Arg(128);

void BM_Step2Check(benchmark::State& state) {
  const auto poly = random_polygon(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step2_check(poly, kTol));
  }
}
BENCHMARK(BM_Step2Check)->Arg(8)->Arg(16)->Arg(32);

void BM_CornerPoints(benchmark::State& state) {
  const auto poly = random_polygon(4, 17);
  const auto& v = poly.vertex_angles();
  for (auto _ : state) {
    benchmark::DoNotOptimize(corner_points(v[0], v[1], v[2], v[3]));
  }
}
BENCHMARK(BM_CornerPoints);

void BM_Harness(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(harness(3, 8, 20, 1, kTol));
  }
}
BENCHMARK(BM_Harness);

}  // namespace

BENCHMARK_MAIN();

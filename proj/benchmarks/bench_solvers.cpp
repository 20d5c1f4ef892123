#include <benchmark/benchmark.h>

#include "spatialvote/multi_candidate.hpp"
#include "spatialvote/oracles.hpp"
#include "spatialvote/single_opponent.hpp"

namespace {

using namespace spatialvote;

ElectionInstance make_instance(int d, int n, int m, long range, unsigned long long seed) {
  GenSpec spec;
  spec.d = d;
  spec.n = n;
  spec.m = m;
  spec.range = range;
  spec.seed = seed;
  return gen_instance(spec);
}

void BM_SweepPlane(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CentralArrangement arr = single_arrangement(make_instance(2, n, 1, 100000, 11));
  for (auto _ : state) benchmark::DoNotOptimize(radial_sweep_2d(arr).best_positive);
  state.SetComplexityN(n);
}
BENCHMARK(BM_SweepPlane)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_EnumerateRegionsPlane(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CentralArrangement arr = single_arrangement(make_instance(2, n, 1, 100000, 13));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regions(arr).best_positive);
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateRegionsPlane)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_EnumerateRegions3d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CentralArrangement arr = single_arrangement(make_instance(3, n, 1, 1000, 17));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regions(arr).best_positive);
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateRegions3d)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void BM_Balls1Plane(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ElectionInstance inst = make_instance(2, n, 3, 64, 19);
  for (auto _ : state) benchmark::DoNotOptimize(solve_multi(inst, MultiMethod::kBalls1).nu);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Balls1Plane)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Balls3Space(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ElectionInstance inst = make_instance(3, n, 2, 32, 23);
  for (auto _ : state) benchmark::DoNotOptimize(solve_multi(inst, MultiMethod::kBalls3).nu);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Balls3Space)->RangeMultiplier(2)->Range(4, 8)->Complexity();

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <eur/eur.hpp>

namespace {

void BM_SolveCStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eur::solve_c_star());
}
BENCHMARK(BM_SolveCStar);

void BM_H1Bound(benchmark::State& state) {
  const eur::Overlap c(0.78);
  for (auto _ : state) benchmark::DoNotOptimize(eur::h1_bound(c));
}
BENCHMARK(BM_H1Bound);

void BM_BVsSweep(benchmark::State& state) {
  for (auto _ : state) {
    double sum = 0.0;
    for (int k = 10; k <= 100; ++k) sum += eur::b_vs(eur::Overlap(k / 100.0)).nats;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_BVsSweep);

void BM_GridMin(benchmark::State& state) {
  eur::oracle::GridOptions opts;
  opts.points_per_axis = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eur::oracle::grid_min(eur::Overlap(0.8), opts));
}
BENCHMARK(BM_GridMin)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_QubitMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eur::oracle::qubit_min(eur::Overlap(0.8)));
}
BENCHMARK(BM_QubitMin)->Unit(benchmark::kMillisecond);

void BM_RandomStateCheck(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eur::oracle::random_state_check(dim, 1000, 1));
  }
}
BENCHMARK(BM_RandomStateCheck)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

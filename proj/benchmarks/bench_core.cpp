#include <random>

#include <benchmark/benchmark.h>

#include "xyquench/correlations.hpp"
#include "xyquench/ed_oracle.hpp"
#include "xyquench/pfaffian.hpp"
#include "xyquench/pipeline.hpp"

using namespace xyq;

namespace {

ChainConfig quench(int n) { return ChainConfig{n, 1.0, 0.5, 1.001, 0.5}; }

void BM_ContractionTable(benchmark::State& state) {
  const ChainConfig c = quench(static_cast<int>(state.range(0)));
  const auto modes = mode_grid(c);
  for (auto _ : state) {
    ContractionTable table(modes, c, TimePoint::at(3.0), 4);
    benchmark::DoNotOptimize(table.ba(1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ContractionTable)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Pfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  SkewMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set_upper(i, j, {g(rng), g(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->DenseRange(2, 12, 2)->Arg(24)->Arg(48);

void BM_ObservePair(benchmark::State& state) {
  const ChainConfig c = quench(2000);
  const auto modes = mode_grid(c);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(observe_pair(modes, c, d, TimePoint::asymptotic()).concurrence);
}
BENCHMARK(BM_ObservePair)->DenseRange(1, 3);

void BM_OracleThermal(benchmark::State& state) {
  const auto h = build_hamiltonian(static_cast<int>(state.range(0)), 1.0, 1.001);
  for (auto _ : state) benchmark::DoNotOptimize(thermal_state(h, 0.5).matrix(0, 0));
}
BENCHMARK(BM_OracleThermal)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

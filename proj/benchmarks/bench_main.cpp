#include <benchmark/benchmark.h>

#include <vector>

#include "spinelab/halfplane.hpp"
#include "spinelab/spines.hpp"
#include "spinelab/steiner_oracle.hpp"

using namespace spinelab;

static void BM_Reduce(benchmark::State& state) {
  const UHPoint z(17.3, 0.004);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_fundamental_domain(z));
}
BENCHMARK(BM_Reduce);

static void BM_FiberOriented(benchmark::State& state) {
  const UHPoint z(0.35, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_oriented(z));
}
BENCHMARK(BM_FiberOriented)->Arg(2)->Arg(10)->Arg(50);

static void BM_Systole(benchmark::State& state) {
  std::vector<UHPoint> pts;
  for (int i = 0; i < 400; ++i) pts.emplace_back(-0.5 + i / 399.0, 0.9 + i * 0.01);
  for (auto _ : state) {
    for (const auto& p : pts) benchmark::DoNotOptimize(spine_systole(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_Systole);

static void BM_Relax(benchmark::State& state) {
  const UHPoint tau(0.2, 1.7);
  const OffsetTriple o{{{0, 0}, {1, 0}, {1, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(relax(tau, o));
}
BENCHMARK(BM_Relax);

static void BM_Oracle(benchmark::State& state) {
  const UHPoint tau(0.35, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(compare_with_analytic(tau, {false, 1}));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

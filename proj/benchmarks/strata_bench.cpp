#include <benchmark/benchmark.h>

#include "hbstrata/incidence.hpp"
#include "hbstrata/serialize.hpp"
#include "hbstrata/verify.hpp"

using namespace hbstrata;

static void BM_EnumerateStrata(benchmark::State& state) {
  const Genus g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_strata(3, 1, g));
}
BENCHMARK(BM_EnumerateStrata)->Arg(2)->Arg(5)->Arg(10);

static void BM_BuildTable(benchmark::State& state) {
  const Genus g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(3, 0, g));
}
BENCHMARK(BM_BuildTable)->Arg(2)->Arg(5)->Arg(10);

static void BM_RenderJson(benchmark::State& state) {
  auto t = build_table(3, 0, Genus(5));
  for (auto _ : state) benchmark::DoNotOptimize(render_table(t, Format::Json));
}
BENCHMARK(BM_RenderJson);

static void BM_FullSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_all());
}
BENCHMARK(BM_FullSweep)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();

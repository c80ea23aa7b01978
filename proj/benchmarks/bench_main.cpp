#include <benchmark/benchmark.h>

#include "rep2d/families.hpp"
#include "rep2d/fingerprint.hpp"
#include "rep2d/periodicity.hpp"
#include "rep2d/repetitions.hpp"

using namespace rep2d;

namespace {

void BM_FingerprintTableBuild(benchmark::State& state) {
  const Grid2D g = families::run_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FingerprintTable table(g);
    benchmark::DoNotOptimize(table.fingerprint(g.full_rect()));
  }
  state.SetItemsProcessed(state.iterations() * g.cell_count());
}
BENCHMARK(BM_FingerprintTableBuild)->Arg(1)->Arg(2)->Arg(3);

void BM_SmallestPeriods(benchmark::State& state) {
  const Grid2D g = families::run_family(2);
  const Rect r = g.full_rect();
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_h_period(g, r));
    benchmark::DoNotOptimize(smallest_v_period(g, r));
  }
}
BENCHMARK(BM_SmallestPeriods);

void BM_CountTandemsFast(benchmark::State& state) {
  const Grid2D g = families::tandem_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_distinct_tandems(g));
}
BENCHMARK(BM_CountTandemsFast)->Arg(1)->Arg(2);

void BM_CountTandemsNaive(benchmark::State& state) {
  const Grid2D g = families::tandem_family(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_distinct_tandems_naive(g, g.cell_count()));
}
BENCHMARK(BM_CountTandemsNaive)->Arg(1)->Arg(2);

void BM_CountQuartics(benchmark::State& state) {
  const Grid2D g = families::quartic_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_distinct_quartics(g));
}
BENCHMARK(BM_CountQuartics)->Arg(2)->Arg(3);

void BM_CountQuarticsBinary(benchmark::State& state) {
  const Grid2D g = families::quartic_binary_family(2);
  for (auto _ : state) benchmark::DoNotOptimize(count_distinct_quartics(g));
}
BENCHMARK(BM_CountQuarticsBinary);

void BM_EnumerateRuns(benchmark::State& state) {
  const Grid2D g = families::run_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_runs(g));
}
BENCHMARK(BM_EnumerateRuns)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateRunsNaive(benchmark::State& state) {
  const Grid2D g = families::run_family(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_runs_naive(g, g.cell_count()));
}
BENCHMARK(BM_EnumerateRunsNaive);

void BM_RunWitnessVerification(benchmark::State& state) {
  const Grid2D g = families::run_family(2);
  const auto ws = families::run_witnesses(2);
  for (auto _ : state) {
    long long ok = 0;
    for (const Rect& r : ws.rects) ok += is_run(g, r);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_RunWitnessVerification)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

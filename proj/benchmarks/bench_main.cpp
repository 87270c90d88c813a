#include <benchmark/benchmark.h>

#include "mirrorcalc/pipeline.hpp"
#include "mirrorcalc/verification.hpp"

using namespace mirrorcalc;

namespace {

const SplittingType kQuintic(4, {5}, {});
const SplittingType kLocalP2(2, {}, {3});

void BM_HgSeriesQuintic(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_hg_series(kQuintic, D));
}
BENCHMARK(BM_HgSeriesQuintic)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PipelineQuintic(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(kQuintic, D));
}
BENCHMARK(BM_PipelineQuintic)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PipelineLocalP2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(kLocalP2, 10));
}
BENCHMARK(BM_PipelineLocalP2)->Unit(benchmark::kMillisecond);

void BM_Reversion(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  ScalarQSeries T = scalar_series(D);
  for (int d = 1; d <= D; ++d) T[d] = Rational(d % 3 - 1, d);
  T[1] = Rational(1);
  for (auto _ : state) benchmark::DoNotOptimize(qseries_reversion(T));
}
BENCHMARK(BM_Reversion)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_GluingCheck(benchmark::State& state) {
  const int dmax = static_cast<int>(state.range(0));
  EulerDataTable t = to_table(build_hypergeom_data(kLocalP2), 2, dmax);
  for (auto _ : state) benchmark::DoNotOptimize(check_gluing(t));
}
BENCHMARK(BM_GluingCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

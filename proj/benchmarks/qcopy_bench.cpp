#include <benchmark/benchmark.h>

#include "qcopy/copiers.hpp"
#include "qcopy/infomeasures.hpp"
#include "qcopy/optimizer.hpp"
#include "qcopy/sweep.hpp"

namespace {

void BM_QuarticRoot(benchmark::State& state) {
  const double f = 0.5;
  const double r = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcopy::cos_phi_of_r(f, r));
  }
}
BENCHMARK(BM_QuarticRoot);

void BM_MaximizeIh(benchmark::State& state) {
  const double f = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcopy::maximize_ih(f));
  }
}
BENCHMARK(BM_MaximizeIh)->Arg(10)->Arg(50)->Arg(90);

void BM_AccessibleInfoScan(benchmark::State& state) {
  const auto out = qcopy::uqcm_copier(qcopy::make_ensemble(0.37));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcopy::accessible_info_scan(out.copy1, out.copy2));
  }
}
BENCHMARK(BM_AccessibleInfoScan);

void BM_EvalRecordUltimate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcopy::eval_record(0.6, qcopy::CopierFamily::ultimate));
  }
}
BENCHMARK(BM_EvalRecordUltimate);

void BM_FullSweep(benchmark::State& state) {
  qcopy::SweepConfig config;
  config.steps = static_cast<int>(state.range(0));
  config.include_baselines = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcopy::run_sweep(config));
  }
}
BENCHMARK(BM_FullSweep)->Arg(11)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

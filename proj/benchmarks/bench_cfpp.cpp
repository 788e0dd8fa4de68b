#include <benchmark/benchmark.h>

#include "cfpp/dependence.hpp"
#include "cfpp/distribution.hpp"
#include "cfpp/simulate.hpp"
#include "cfpp/special_functions.hpp"

using namespace cfpp;

namespace {

const IntensityModel kGeo = IntensityModel::geometric(1.0, 0.5);
const IntensityModel kFin = IntensityModel::finite({2.0, 1.0, 0.5});

// Range argument is -x * 10.
void BM_MittagLefflerTwo(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(ml_two(0.7, 1.0, x));
}
BENCHMARK(BM_MittagLefflerTwo)->Arg(5)->Arg(50)->Arg(500)->Arg(50'000);

void BM_MittagLefflerThree(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ml_three({0.6, k * 0.6 + 1.0, k + 1.0}, -3.0));
}
BENCHMARK(BM_MittagLefflerThree)->Arg(1)->Arg(16)->Arg(64);

void BM_PmfLambdaGeometric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_cfpp(kGeo, 0.7, 1.0, n));
}
BENCHMARK(BM_PmfLambdaGeometric)->Arg(16)->Arg(32)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PmfFormulas(benchmark::State& state) {
  const auto f = static_cast<PmfFormula>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_cfpp(kFin, 0.7, 1.0, 20, f));
  state.SetLabel(std::string(to_string(f)));
}
BENCHMARK(BM_PmfFormulas)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_AutoNMax(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(auto_n_max(kGeo, 0.5, 5.0));
}
BENCHMARK(BM_AutoNMax)->Unit(benchmark::kMicrosecond);

void BM_SampleCfpp(benchmark::State& state) {
  const auto method = static_cast<SamplerMethod>(state.range(0));
  Xoshiro256 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_cfpp(kGeo, 0.7, 1.0, method, rng));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_SampleCfpp)->Arg(static_cast<int>(SamplerMethod::TimeChange))->Arg(static_cast<int>(SamplerMethod::RenewalCompound));

void BM_McPmf(benchmark::State& state) {
  SamplerConfig cfg;
  cfg.n_samples = 100'000;
  cfg.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_pmf(kGeo, 0.7, 1.0, cfg));
}
BENCHMARK(BM_McPmf)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CorrProcess(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corr_cfpp(kGeo, 0.7, 1.0, 1e4));
}
BENCHMARK(BM_CorrProcess);

void BM_CorrIncrement(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corr_increment(kGeo, 0.7, 1.0, 1e4, 1.0));
}
BENCHMARK(BM_CorrIncrement);

}  // namespace

BENCHMARK_MAIN();

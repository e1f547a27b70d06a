#include <benchmark/benchmark.h>

#include "strata/catalog.hpp"
#include "strata/ih.hpp"

using namespace strata;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Homology(benchmark::State& state) {
  const auto& K = catalog::get("Sigma-T3").complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(K, Ring::integers(), false, exec_of(state)));
}

void BM_Validate(benchmark::State& state) {
  const auto& FX = catalog::get("S1xSigma-T2").stratifications.back();
  for (auto _ : state) benchmark::DoNotOptimize(validate(FX, Mode::Closed, exec_of(state)));
}

void BM_IntrinsicData(benchmark::State& state) {
  const auto& K = catalog::get("S1xSigma-T2").complex;
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_data(K, exec_of(state)));
}

void BM_IntersectionHomology(benchmark::State& state) {
  const auto& FX = catalog::get("Sigma-RP3").stratifications.back();
  for (auto _ : state)
    benchmark::DoNotOptimize(intersection_homology(FX, lower_middle(4), Ring::integers(), exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Homology)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Validate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntrinsicData)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionHomology)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

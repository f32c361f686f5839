#include <benchmark/benchmark.h>

#include "hadamard/hadamard.hpp"

using namespace hadamard;

namespace {

const MaterialParams kP(1.0, 1.0, 3.0);

void BM_JumpPair(benchmark::State& state) {
  double e = 1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jump_pair(e, kP));
    e = e > 3.0 ? 1.2 : e + 1e-3;
  }
}
BENCHMARK(BM_JumpPair);

void BM_SolveNucleus(benchmark::State& state) {
  const MaterialParams p = kP.with_mu(static_cast<double>(state.range(0)) / 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_nucleus(p).eps_inf);
}
BENCHMARK(BM_SolveNucleus)->Arg(1)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SecondaryCurve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(secondary_curve(kP, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SecondaryCurve)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_PcxClassifyHydro(benchmark::State& state) {
  double e = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcx_classify_hydro(e, kP));
    e = e > 1.1 ? 1.0 : e + 1e-4;
  }
}
BENCHMARK(BM_PcxClassifyHydro);

void BM_PcxBoundNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pcx_bound_hydro_numeric(kP));
}
BENCHMARK(BM_PcxBoundNumeric)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

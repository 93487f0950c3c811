#include <benchmark/benchmark.h>

#include "circlepoly/circlepoly.hpp"

using namespace circlepoly;

namespace {

FunctionSpec inverse_half() { return FunctionSpec::ratio(Polynomial{1.0}, Polynomial{1.0, -0.5}); }

void BM_ExpSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto f = inverse_half().taylor(order - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(integrate(f)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpSeries)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_RootsAberth(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const Polynomial P = construct(inverse_half(), N).P;
  for (auto _ : state) benchmark::DoNotOptimize(roots_aberth(P));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RootsAberth)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_Construct(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto f = inverse_half();
  for (auto _ : state) benchmark::DoNotOptimize(construct(f, N));
}
BENCHMARK(BM_Construct)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_MeasureSupError(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto f = inverse_half();
  const auto appr = construct(f, N);
  for (auto _ : state) benchmark::DoNotOptimize(measure_sup_error(appr, f, 0.5, default_error_samples(N)));
}
BENCHMARK(BM_MeasureSupError)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto f = inverse_half();
  const auto appr = construct(f, N);
  for (auto _ : state) benchmark::DoNotOptimize(verify(appr, f, VerifyOptions{}));
}
BENCHMARK(BM_Verify)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

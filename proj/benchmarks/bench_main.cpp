#include <benchmark/benchmark.h>

#include "sincprod/anomalies.hpp"
#include "sincprod/elementary.hpp"
#include "sincprod/products.hpp"
#include "sincprod/special.hpp"

namespace {

using namespace sincprod;

void BM_LnGamma(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_digits(static_cast<int>(state.range(0)));
  const Real x = Real::parse("3.25", ctx.working_bits());
  for (auto _ : state) benchmark::DoNotOptimize(lngamma(x, ctx));
}
BENCHMARK(BM_LnGamma)->Arg(50)->Arg(100)->Arg(200);

void BM_Vsum2(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_digits(static_cast<int>(state.range(0)));
  const ExactArgument a = ExactArgument::parse("1.3");
  for (auto _ : state) benchmark::DoNotOptimize(vsum2_product(a, ctx));
}
BENCHMARK(BM_Vsum2)->Arg(50)->Arg(100);

void BM_Br114(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_digits(50);
  const ExactArgument a = ExactArgument::parse("1");
  for (auto _ : state) benchmark::DoNotOptimize(br114_finite(a, state.range(0), ctx));
}
BENCHMARK(BM_Br114)->Arg(10)->Arg(150);

void BM_ReduceScaled(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_digits(50);
  const ExactArgument a = ExactArgument::parse("1");
  const auto j = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_scaled(a, 2, j, ctx));
}
BENCHMARK(BM_ReduceScaled)->Arg(10)->Arg(200)->Arg(1000);

void BM_WeierstrassTrajectory(benchmark::State& state) {
  const PrecisionContext ctx = PrecisionContext::with_digits(50);
  const ExactArgument a = ExactArgument::parse("1");
  for (auto _ : state) benchmark::DoNotOptimize(weierstrass_trajectory(a, 200, ctx, true));
}
BENCHMARK(BM_WeierstrassTrajectory)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

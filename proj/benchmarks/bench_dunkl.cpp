#include <benchmark/benchmark.h>

#include "dunkl/besov.hpp"
#include "dunkl/remainder.hpp"
#include "dunkl/theta.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

static void BM_BCoeff(benchmark::State& state) {
  const DunklParameter p(0.5);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b_coeff(p, n, 1.7));
}
BENCHMARK(BM_BCoeff)->Arg(2)->Arg(8)->Arg(32);

static void BM_ThetaBuild(benchmark::State& state) {
  const DunklParameter p = DunklParameter::parse("0.5");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta_build(p, k, 1.3));
}
BENCHMARK(BM_ThetaBuild)->DenseRange(0, 4);

static void BM_ThetaAbsIntegral(benchmark::State& state) {
  const DunklParameter p(0.5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta_abs_integral(p, k, 2.0).value);
}
BENCHMARK(BM_ThetaAbsIntegral)->DenseRange(1, 4);

static void BM_Translate(benchmark::State& state) {
  const DunklParameter p(0.5);
  const TranslationKernel tau(p);
  const SmoothPtr f = make_catalog_function(state.range(0) == 0 ? "gaussian(1)" : "bump(2)");
  for (auto _ : state) benchmark::DoNotOptimize(tau(*f, 0.9, -1.4));
}
BENCHMARK(BM_Translate)->Arg(0)->Arg(1);

static void BM_RemainderNorm(benchmark::State& state) {
  const DunklParameter p(0.5);
  const TranslationKernel tau(p);
  const TestFunction f = make_test_function(p, "gaussian(1)", 2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(remainder_norm(f, k, 0.7, 2.0, tau).value);
}
BENCHMARK(BM_RemainderNorm)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_KDecomposition(benchmark::State& state) {
  const DunklParameter p(0.5);
  const TranslationKernel tau(p);
  const Theta0Rule rule(p);
  const TestFunction f = make_test_function(p, "gaussian(1)", 2);
  for (auto _ : state) benchmark::DoNotOptimize(k_decomposition(f, 1, 0.5, 2.0, tau, rule).n0);
}
BENCHMARK(BM_KDecomposition)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

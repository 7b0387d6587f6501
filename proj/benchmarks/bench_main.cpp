#include <benchmark/benchmark.h>

#include <complex>

#include "desing/desing_coeffs.hpp"
#include "desing/numeric.hpp"
#include "desing/special_values.hpp"

using namespace desing;
using cd = std::complex<double>;

static void BM_HurwitzZeta(benchmark::State& state) {
  const cd s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta<double>(s, cd(1.5)));
}
BENCHMARK(BM_HurwitzZeta)->Arg(0)->Arg(10)->Arg(50);

static void BM_DoubleZetaRegular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(double_zeta<double>(cd(2.5, 1), cd(-1.5, 0.5), 1.0, 1.0));
}
BENCHMARK(BM_DoubleZetaRegular);

static void BM_Desing2Regular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(desing2<double>(3, 4));
}
BENCHMARK(BM_Desing2Regular);

static void BM_Desing2Extrapolated(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(desing2<double>(-2, -3, 1.0, 1.0, 1e-6));
}
BENCHMARK(BM_Desing2Extrapolated);

static void BM_ExpandG(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_G(r));
}
BENCHMARK(BM_ExpandG)->DenseRange(2, 6);

static void BM_ExpandH(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_H(r));
}
BENCHMARK(BM_ExpandH)->DenseRange(2, 5);

static void BM_DesingValueExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<BigRational> g{BigRational(1, 2), 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(desing_value_exact(MultiIndex{k, k, k}, g));
}
BENCHMARK(BM_DesingValueExact)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "altcat/schubert/schubert.hpp"
#include "altcat/sequence/growth.hpp"
#include "altcat/sequence/routes.hpp"

using namespace altcat;

static void BM_Closed(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alt_catalan_closed(g));
}
BENCHMARK(BM_Closed)->Arg(10)->Arg(20)->Arg(40);

static void BM_CoeffForm(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alt_catalan_coeff_form(g));
}
BENCHMARK(BM_CoeffForm)->Arg(10)->Arg(20)->Arg(40);

static void BM_Genfun(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genfun_series(order));
}
BENCHMARK(BM_Genfun)->Arg(21)->Arg(41)->Arg(81);

static void BM_Lagrange(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_pipeline(order));
}
BENCHMARK(BM_Lagrange)->Arg(21)->Arg(41);

static void BM_Schubert(benchmark::State& state) {
  const auto g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::alt_catalan_schubert(g, 16, 16));
}
BENCHMARK(BM_Schubert)->DenseRange(2, 12, 2);

static void BM_Growth(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(growth_report(41));
}
BENCHMARK(BM_Growth);

#include <benchmark/benchmark.h>

#include "altcat/covers/elliptic.hpp"
#include "altcat/covers/maps.hpp"
#include "altcat/verify/suites.hpp"

using namespace altcat;

static void BM_NodePairMaps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(covers::check_node_pair_maps());
}
BENCHMARK(BM_NodePairMaps);

static void BM_GIdentities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(covers::check_G_identities());
}
BENCHMARK(BM_GIdentities);

static void BM_CoversSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::covers, 0));
}
BENCHMARK(BM_CoversSuite);

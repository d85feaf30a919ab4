#include <benchmark/benchmark.h>

#include "spinhom/bar_blocks.hpp"
#include "spinhom/classify.hpp"
#include "spinhom/dimensions.hpp"
#include "spinhom/ladders.hpp"
#include "spinhom/tableaux.hpp"
#include "spinhom/wreath.hpp"

using namespace spinhom;

static void BM_StrictPartitions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(strict_partitions_of(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StrictPartitions)->Arg(20)->Arg(30)->Arg(40);

static void BM_Regularize(benchmark::State& state) {
  auto all = p_strict_partitions_of(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    for (const auto& la : all) benchmark::DoNotOptimize(regularize(la, 3));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_Regularize)->Arg(16)->Arg(20);

static void BM_LadderIdentities(benchmark::State& state) {
  auto all = p_strict_partitions_of(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    for (const auto& la : all) benchmark::DoNotOptimize(check_ladder_identities(la, 3));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_LadderIdentities)->Arg(16)->Arg(20);

static void BM_Ddeg(benchmark::State& state) {
  auto all = strict_partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& la : all) benchmark::DoNotOptimize(ddeg(la, 3));
}
BENCHMARK(BM_Ddeg)->Arg(20)->Arg(40);

static void BM_CountSst(benchmark::State& state) {
  Partition la{12, 9, 6, 4, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(count_sst(la));
}
BENCHMARK(BM_CountSst);

static void BM_RegPreimages(benchmark::State& state) {
  Partition mu = regularize({19, 13, 10, 7, 4, 1}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reg_preimages(mu, 3));
}
BENCHMARK(BM_RegPreimages);

static void BM_WreathCartan0(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto all = partitions_of(d);
  for (auto _ : state) {
    lr_cache_clear();
    for (const auto& nu : all) benchmark::DoNotOptimize(wreath_cartan0(nu, nu));
  }
}
BENCHMARK(BM_WreathCartan0)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ClassifyCertified(benchmark::State& state) {
  auto all = strict_partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& la : all) benchmark::DoNotOptimize(certified_verdict(la));
}
BENCHMARK(BM_ClassifyCertified)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include "treeprof/canonical.hpp"
#include "treeprof/census.hpp"
#include "treeprof/enumerate.hpp"
#include "treeprof/profile.hpp"
#include "treeprof/random_tree.hpp"

#include <benchmark/benchmark.h>

using namespace treeprof;

static void BM_Profile5Fast(benchmark::State& state) {
  const Tree t = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(profile5_fast(t));
}
BENCHMARK(BM_Profile5Fast)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_Census5(benchmark::State& state) {
  const Tree t = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  const TypeCatalog catalog(5);
  for (auto _ : state) benchmark::DoNotOptimize(k_profile(t, catalog));
}
BENCHMARK(BM_Census5)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_SubtreeTotal(benchmark::State& state) {
  const Tree t = random_tree(10000, 7);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subtree_total(t, k));
}
BENCHMARK(BM_SubtreeTotal)->Arg(5)->Arg(10)->Arg(20);

static void BM_Canonicalize(benchmark::State& state) {
  const Tree t = random_tree(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(t));
}
BENCHMARK(BM_Canonicalize)->Arg(10)->Arg(100)->Arg(1000);

static void BM_EnumerateTrees(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(k));
}
BENCHMARK(BM_EnumerateTrees)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "twcanon/canonize.hpp"
#include "twcanon/generator.hpp"
#include "twcanon/nested.hpp"
#include "twcanon/treedec.hpp"

using namespace twcanon;

namespace {

void BM_TreewidthExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_partial_ktree(n, 3, 0.8, 7);
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g, n));
}
BENCHMARK(BM_TreewidthExact)->Arg(10)->Arg(14)->Arg(18);

void BM_Improve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_partial_ktree(n, 2, 0.7, 11);
  for (auto _ : state) benchmark::DoNotOptimize(improve(g, 2, n));
}
BENCHMARK(BM_Improve)->Arg(8)->Arg(12);

void BM_NestedDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ColoredGraph g = random_partial_ktree(n, 2, 0.9, 3);
  while (components(g).size() != 1)
    g = random_partial_ktree(n, 2, 0.9, 3 + g.edge_count());
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_nested_decomposition(g, 2));
}
BENCHMARK(BM_NestedDecomposition)->Arg(6)->Arg(8)->Arg(10);

void BM_Canon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_partial_ktree(n, 2, 0.75, 19);
  for (auto _ : state) benchmark::DoNotOptimize(canon(g, 2).matrix);
}
BENCHMARK(BM_Canon)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"
#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/products.hpp"

using namespace domlab;

namespace {

const std::vector<Graph>& sample() {
  static const auto graphs = random_graphs(64, 10, 20, 7);
  return graphs;
}

void BM_DominationNumber(benchmark::State& state) {
  for (auto _ : state)
    for (const Graph& g : sample()) benchmark::DoNotOptimize(domination_number(g));
}
BENCHMARK(BM_DominationNumber);

void BM_WellDominatedProduct(benchmark::State& state) {
  const Graph c5 = make_named(NamedGraph::cycle(5));
  const Graph p = product(ProductKind::cartesian, c5, c5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_well_dominated(p));
}
BENCHMARK(BM_WellDominatedProduct);

void BM_CanonicalForm(benchmark::State& state) {
  for (auto _ : state)
    for (const Graph& g : sample()) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n).size());
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

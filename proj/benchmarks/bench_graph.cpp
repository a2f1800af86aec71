#include <benchmark/benchmark.h>

#include "ncg/catalog.hpp"
#include "ncg/ncgraph.hpp"

namespace {

void BM_BuildGraphSl2(benchmark::State& state) {
  const auto L = ncg::sl2(ncg::default_field_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ncg::build_graph(L));
  state.counters["vertices"] = static_cast<double>(ncg::build_graph(L).graph.order());
}
BENCHMARK(BM_BuildGraphSl2)->Arg(5)->Arg(7)->Arg(9)->Arg(13);

void BM_BuildGraphGl2(benchmark::State& state) {
  const auto L = ncg::gl2(ncg::default_field_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ncg::build_graph(L));
}
BENCHMARK(BM_BuildGraphGl2)->Arg(3)->Arg(5)->Arg(7);

void BM_Invariants(benchmark::State& state) {
  const auto g = ncg::build_graph(ncg::gl2(ncg::default_field_spec(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(ncg::compute_invariants(g.graph));
}
BENCHMARK(BM_Invariants)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

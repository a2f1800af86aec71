#include <random>

#include <benchmark/benchmark.h>

#include "ncg/invariants.hpp"

namespace {

ncg::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  ncg::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_Clique(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::clique_number(g));
}
BENCHMARK(BM_Clique)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Chromatic(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::chromatic_number(g));
}
BENCHMARK(BM_Chromatic)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Domination(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::domination_number(g));
}
BENCHMARK(BM_Domination)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Isomorphism(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 0.5, 4);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (i * 7 + 3) % n;
  const auto h = g.permuted(perm);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::is_isomorphic(g, h));
}
BENCHMARK(BM_Isomorphism)->Arg(31)->Arg(63);

void BM_Planarity(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3.0 / static_cast<double>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::is_planar(g));
}
BENCHMARK(BM_Planarity)->Arg(50)->Arg(200);

}  // namespace

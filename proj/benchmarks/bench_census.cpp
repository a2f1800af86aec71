#include <benchmark/benchmark.h>

#include "ncg/census.hpp"
#include "ncg/verify.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto spec = ncg::default_field_spec(static_cast<int>(state.range(1)));
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ncg::enumerate_brackets(dim, spec, true, [](std::uint64_t, const ncg::LieAlgebra&) {}));
}
BENCHMARK(BM_Enumerate)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_CensusDim3F2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncg::run_census(3, ncg::default_field_spec(2)));
}
BENCHMARK(BM_CensusDim3F2)->Unit(benchmark::kMillisecond);

void BM_VerifyCensusDim3F2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncg::verify_census(3, ncg::default_field_spec(2)));
}
BENCHMARK(BM_VerifyCensusDim3F2)->Unit(benchmark::kMillisecond);

}  // namespace

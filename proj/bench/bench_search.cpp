#include <benchmark/benchmark.h>

#include "canondeg/search.hpp"

using namespace canondeg;

namespace {

SearchSpec spec_for(const benchmark::State& state) {
  SearchSpec spec;
  spec.max_genus = static_cast<int>(state.range(0));
  spec.threads = static_cast<int>(state.range(1));
  return spec;
}

void BM_SearchSerial(benchmark::State& state) {
  const SearchSpec spec = spec_for(state);
  std::uint64_t visited = 0;
  for (auto _ : state) {
    const auto r = search_serial(spec);
    visited = r.visited;
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.counters["semigroups"] = static_cast<double>(visited);
}

void BM_SearchParallel(benchmark::State& state) {
  const SearchSpec spec = spec_for(state);
  std::uint64_t visited = 0;
  for (auto _ : state) {
    const auto r = search_parallel(spec);
    visited = r.visited;
    benchmark::DoNotOptimize(r.rows.data());
  }
  state.counters["semigroups"] = static_cast<double>(visited);
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Args({14, 1})->Args({16, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->ArgsProduct({{14, 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

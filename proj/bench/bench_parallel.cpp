// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "boij/extension_polytope.hpp"
#include "boij/stillman.hpp"
#include "boij/supernatural.hpp"

namespace {

void BM_ScanParallel(benchmark::State& state) {
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boij::scan(3, 4, p_max));
}

void BM_ScanSerial(benchmark::State& state) {
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boij::scan_serial(3, 4, p_max));
}

// O(-2)^k + O(2)^k on P^1 with k = 5 * range(0), all cancellation patterns.
std::pair<boij::CohomologyTable, boij::CohomologyTable> triangle(int k) {
  boij::Window w{-6, 4};
  return {boij::scale(boij::line_bundle(1, -2, w), 5 * k), boij::scale(boij::line_bundle(1, 2, w), 5 * k)};
}

void BM_PolytopeParallel(benchmark::State& state) {
  auto [a, b] = triangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boij::enumerate_patterns(a, b, {}));
}

void BM_PolytopeSerial(benchmark::State& state) {
  auto [a, b] = triangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boij::enumerate_patterns_serial(a, b, {}));
}

}  // namespace

BENCHMARK(BM_ScanParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolytopeParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolytopeSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

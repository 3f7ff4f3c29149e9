#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "costas/reconstruct.hpp"
#include "costas/search.hpp"
#include "costas/ucm.hpp"

namespace {

std::vector<int> all_firsts(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto firsts = all_firsts(n);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto r = costas::kernels::enumerate_serial(n, firsts, true);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.arrays.data());
  }
  state.counters["nodes"] = double(nodes);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = int(state.range(0));
  const int threads = int(state.range(1));
  const auto firsts = all_firsts(n);
  for (auto _ : state) {
    auto r = costas::kernels::enumerate_parallel(n, firsts, true, threads);
    benchmark::DoNotOptimize(r.arrays.data());
  }
}

void BM_EnumerateSymmetry(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    auto r = costas::enumerate_all_via_symmetry(n);
    benchmark::DoNotOptimize(r.arrays.data());
  }
}

void BM_Reconstruct(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto f = costas::build_ucfm(costas::build_ucm(n));
  for (auto _ : state) {
    auto r = costas::reconstruct(f);
    benchmark::DoNotOptimize(r.nodes);
  }
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)
    ->ArgsProduct({{8, 10, 12}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_EnumerateSymmetry)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

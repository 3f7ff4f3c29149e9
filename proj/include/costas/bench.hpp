#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace costas {

struct TimingStats {
  double mean = 0.0;  // seconds per call
  double min = 0.0;
  double max = 0.0;
};

/// One order's comparison of reconstruction from a precomputed UCFM against
/// plain symmetry-reduced enumeration.
struct BenchEntry {
  int order = 0;
  std::size_t arrays = 0;
  int runs = 0;
  std::uint64_t reconstruct_calls_per_run = 1;
  std::uint64_t enumerate_calls_per_run = 1;
  TimingStats reconstruct;
  TimingStats enumerate;
  std::uint64_t reconstruct_nodes = 0;
  std::uint64_t enumerate_nodes = 0;
  /// 100 * (1 - mean(reconstruct) / mean(enumerate)).
  double improvement = 0.0;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
  /// Orders dropped because the two paths disagreed.
  std::vector<int> rejected_orders;

  std::string to_json() const;
};

struct BenchOptions {
  int min_order = 4;
  int max_order = 12;
  /// Runs per order; unset uses 10 for n < 13 and 3 for n >= 13.
  std::optional<int> runs;
  /// Each run repeats the call until this much wall time has elapsed, so that
  /// sub-millisecond orders are not dominated by timer resolution.
  double min_run_seconds = 0.002;
  int order_cap = 17;
};

int default_runs(int order);
double improvement_percent(double mean_reconstruct, double mean_enumerate);

/// Throws kInvalidArgument for bad ranges/runs and kOrderTooLarge above the cap.
BenchReport bench_compare(const BenchOptions& options);

}  // namespace costas

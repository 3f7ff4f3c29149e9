#include "costas/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>

#include "costas/error.hpp"
#include "costas/reconstruct.hpp"
#include "costas/search.hpp"
#include "costas/ucm.hpp"

namespace costas {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double seconds_for(std::uint64_t calls, F&& fn) {
  const auto start = Clock::now();
  for (std::uint64_t i = 0; i < calls; ++i) fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t calibrate(double single_call_seconds, double min_run_seconds) {
  if (single_call_seconds >= min_run_seconds) return 1;
  const double reps = std::ceil(min_run_seconds / std::max(single_call_seconds, 1e-9));
  return std::uint64_t(std::min(reps, 1e7));
}

template <class F>
TimingStats time_runs(int runs, std::uint64_t calls, F&& fn) {
  TimingStats s;
  s.min = INFINITY;
  double total = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double t = seconds_for(calls, fn) / double(calls);
    total += t;
    s.min = std::min(s.min, t);
    s.max = std::max(s.max, t);
  }
  s.mean = total / runs;
  return s;
}

}  // namespace

int default_runs(int order) { return order < 13 ? 10 : 3; }

double improvement_percent(double mean_reconstruct, double mean_enumerate) {
  return 100.0 * (1.0 - mean_reconstruct / mean_enumerate);
}

BenchReport bench_compare(const BenchOptions& options) {
  if (options.min_order < 4 || options.min_order > options.max_order) {
    throw Error(ErrorKind::kInvalidArgument, "bench requires 4 <= min <= max");
  }
  if (options.max_order > options.order_cap) {
    throw Error(ErrorKind::kOrderTooLarge, "bench max order " +
                                               std::to_string(options.max_order) +
                                               " exceeds cap " + std::to_string(options.order_cap));
  }
  if (options.runs && *options.runs < 1) {
    throw Error(ErrorKind::kInvalidArgument, "runs must be >= 1");
  }

  BenchReport report;
  SearchOptions search;
  search.max_order = std::max(options.order_cap, kDefaultMaxOrder);
  ReconstructOptions rec_options;
  rec_options.max_order = search.max_order;

  for (int n = options.min_order; n <= options.max_order; ++n) {
    // F_n is given to the reconstruction path; building it is not timed.
    const Ucfm f = build_ucfm(build_ucm(n, search));

    const auto t0 = Clock::now();
    const ReconstructionResult rec = reconstruct(f, rec_options);
    const auto t1 = Clock::now();
    const EnumerationResult all = enumerate_all_via_symmetry(n, search);
    const auto t2 = Clock::now();

    if (rec.ucm.rows() != all.arrays) {
      report.rejected_orders.push_back(n);
      continue;
    }

    BenchEntry e;
    e.order = n;
    e.arrays = all.count();
    e.runs = options.runs.value_or(default_runs(n));
    e.reconstruct_nodes = rec.nodes;
    e.enumerate_nodes = all.nodes;
    e.reconstruct_calls_per_run = calibrate(
        std::chrono::duration<double>(t1 - t0).count(), options.min_run_seconds);
    e.enumerate_calls_per_run = calibrate(
        std::chrono::duration<double>(t2 - t1).count(), options.min_run_seconds);
    e.reconstruct = time_runs(e.runs, e.reconstruct_calls_per_run,
                              [&] { (void)reconstruct(f, rec_options); });
    e.enumerate = time_runs(e.runs, e.enumerate_calls_per_run,
                            [&] { (void)enumerate_all_via_symmetry(n, search); });
    e.improvement = improvement_percent(e.reconstruct.mean, e.enumerate.mean);
    report.entries.push_back(e);
  }
  return report;
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["improvement_formula"] = "100 * (1 - mean(reconstruct) / mean(enumerate))";
  j["time_unit"] = "seconds per call";
  auto& rows = j["orders"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json r;
    r["order"] = e.order;
    r["arrays"] = e.arrays;
    r["runs"] = e.runs;
    r["reconstruct"] = {{"mean", e.reconstruct.mean},
                        {"min", e.reconstruct.min},
                        {"max", e.reconstruct.max},
                        {"calls_per_run", e.reconstruct_calls_per_run},
                        {"nodes", e.reconstruct_nodes}};
    r["enumerate"] = {{"mean", e.enumerate.mean},
                      {"min", e.enumerate.min},
                      {"max", e.enumerate.max},
                      {"calls_per_run", e.enumerate_calls_per_run},
                      {"nodes", e.enumerate_nodes}};
    r["improvement_percent"] = e.improvement;
    rows.push_back(std::move(r));
  }
  j["rejected_orders"] = rejected_orders;
  return j.dump(2) + "\n";
}

}  // namespace costas

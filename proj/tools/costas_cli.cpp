// costas: enumerate Costas arrays, build and verify UCMs/UCFMs, reconstruct
// UCMs from frequency matrices, render heatmaps and run the benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "costas/bench.hpp"
#include "costas/error.hpp"
#include "costas/io.hpp"
#include "costas/reconstruct.hpp"
#include "costas/search.hpp"
#include "costas/ucm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

int exit_code_for(costas::ErrorKind kind) {
  using costas::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kOrderTooLarge:
    case ErrorKind::kDegenerateOrder:
    case ErrorKind::kColumnOutOfRange:
      return kExitUsage;
    default:
      return kExitData;
  }
}

void write_text(const std::string& path, const auto& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw costas::Error(costas::ErrorKind::kIo, "cannot open " + path + " for writing");
  writer(out);
  if (!out.flush()) throw costas::Error(costas::ErrorKind::kIo, "failed writing " + path);
}

void print_warnings(const costas::io::ArrayList& list) {
  for (const auto& w : list.warnings) std::cerr << "warning: " << w << "\n";
}

// Duplicate lines are reported as warnings by the reader; a UCM keeps one copy.
std::vector<costas::Permutation> unique_arrays(std::vector<costas::Permutation> arrays) {
  std::sort(arrays.begin(), arrays.end());
  arrays.erase(std::unique(arrays.begin(), arrays.end()), arrays.end());
  return arrays;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Costas array enumeration, UCM/UCFM construction and reconstruction"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for search (1 = serial)")
      ->check(CLI::Range(1, 1024));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List Costas arrays of one order");
  int enum_order = 0;
  std::optional<int> enum_first;
  std::string enum_out;
  bool enum_symmetry = false;
  enumerate->add_option("--order", enum_order, "Order n")->required();
  enumerate->add_option("--first", enum_first, "Restrict to first element (1-based)");
  enumerate->add_option("--out", enum_out, "Output array list (default stdout)");
  enumerate->add_flag("--symmetry", enum_symmetry,
                      "Search half the first elements and close under the dihedral group");

  // ucm
  auto* ucm = app.add_subcommand("ucm", "Write the canonical UCM of one order");
  int ucm_order = 0;
  std::string ucm_out;
  ucm->add_option("--order", ucm_order, "Order n")->required();
  ucm->add_option("--out", ucm_out, "Output array list")->required();

  // ucfm
  auto* ucfm = app.add_subcommand("ucfm", "Write a UCFM as CSV");
  std::optional<int> ucfm_order;
  std::string ucfm_arrays;
  std::string ucfm_out;
  auto* ucfm_order_opt = ucfm->add_option("--order", ucfm_order, "Order n (complete UCFM)");
  auto* ucfm_arrays_opt =
      ucfm->add_option("--arrays", ucfm_arrays, "Array list file (partial UCFM)");
  ucfm_order_opt->excludes(ucfm_arrays_opt);
  ucfm->add_option("--out", ucfm_out, "Output CSV")->required();

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "Rebuild the UCM from a complete UCFM");
  std::string rec_in;
  std::string rec_out;
  rec->add_option("--ucfm", rec_in, "Input UCFM CSV")->required();
  rec->add_option("--out", rec_out, "Output array list")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check the UCM/UCFM structural theorems");
  std::optional<int> verify_order;
  std::string verify_ucm;
  std::optional<std::size_t> expect_count;
  auto* v_order = verify->add_option("--order", verify_order, "Enumerate order n and verify");
  auto* v_ucm = verify->add_option("--ucm", verify_ucm, "Verify the arrays in this file");
  v_order->excludes(v_ucm);
  verify->add_option("--expect-count", expect_count,
                     "Known C(n); the file is complete when its row count matches");

  // heatmap
  auto* heatmap = app.add_subcommand("heatmap", "Render a UCFM as a binary PGM");
  std::string heat_in;
  std::string heat_out;
  heatmap->add_option("--ucfm", heat_in, "Input UCFM CSV")->required();
  heatmap->add_option("--out", heat_out, "Output .pgm")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Time reconstruction against enumeration");
  costas::BenchOptions bench_opts;
  std::optional<int> bench_runs;
  std::string bench_out;
  bench->add_option("--min", bench_opts.min_order, "Smallest order")->required();
  bench->add_option("--max", bench_opts.max_order, "Largest order")->required();
  bench->add_option("--runs", bench_runs,
                    "Runs per order (default 10 for n < 13, 3 for n >= 13)");
  bench->add_option("--min-run-seconds", bench_opts.min_run_seconds,
                    "Repeat each timed call until this much time elapses");
  bench->add_option("--out", bench_out, "JSON report (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  costas::SearchOptions search;
  search.threads = threads;

  try {
    if (*enumerate) {
      search.first_element = enum_first;
      const auto result = enum_symmetry ? costas::enumerate_all_via_symmetry(enum_order, search)
                                        : costas::enumerate_costas(enum_order, search);
      write_text(enum_out, [&](std::ostream& os) { costas::io::format_arrays(os, result.arrays); });
      std::cerr << result.count() << " arrays, " << result.nodes << " nodes\n";
    } else if (*ucm) {
      const auto u = costas::build_ucm(ucm_order, search);
      costas::io::write_arrays(ucm_out, u.rows());
    } else if (*ucfm) {
      if (!ucfm_order && ucfm_arrays.empty()) {
        std::cerr << "ucfm: one of --order or --arrays is required\n";
        return kExitUsage;
      }
      std::optional<costas::Ucm> u;
      if (ucfm_order) {
        u = costas::build_ucm(*ucfm_order, search);
      } else {
        auto list = costas::io::read_arrays(ucfm_arrays, {.require_costas = true});
        print_warnings(list);
        u = costas::build_ucm_from_arrays(unique_arrays(std::move(list.arrays)));
      }
      costas::io::write_ucfm(ucfm_out, costas::build_ucfm(*u));
    } else if (*rec) {
      const auto f = costas::io::read_ucfm(rec_in);
      const auto u = costas::reconstruct_ucm(f);
      costas::io::write_arrays(rec_out, u.rows());
    } else if (*verify) {
      std::optional<costas::Ucm> u;
      if (verify_order) {
        u = costas::build_ucm(*verify_order, search);
      } else if (!verify_ucm.empty()) {
        auto list = costas::io::read_arrays(verify_ucm, {.require_costas = true});
        print_warnings(list);
        auto arrays = unique_arrays(std::move(list.arrays));
        if (arrays.empty()) throw costas::Error(costas::ErrorKind::kParse, "no arrays in file");
        std::optional<std::size_t> known = expect_count;
        // Small orders are cheap to count exactly.
        if (!known && arrays.front().order() <= 12) {
          known = costas::enumerate_costas(int(arrays.front().order()), search).count();
        }
        u = costas::build_ucm_from_arrays(std::move(arrays), known);
      } else {
        std::cerr << "verify: one of --order or --ucm is required\n";
        return kExitUsage;
      }
      const auto report = costas::verify_theorems(*u, costas::build_ucfm(*u));
      std::cout << report.to_text();
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    } else if (*heatmap) {
      const auto f = costas::io::read_ucfm(heat_in);
      costas::io::write_bytes(heat_out, costas::io::render_heatmap(f));
    } else if (*bench) {
      if (threads != 1) {
        std::cerr << "warning: bench timings always use the serial kernel\n";
      }
      bench_opts.runs = bench_runs;
      const auto report = costas::bench_compare(bench_opts);
      write_text(bench_out, [&](std::ostream& os) { os << report.to_json(); });
    }
  } catch (const costas::Error& e) {
    std::cerr << "error (" << costas::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

#include "costas/reconstruct.hpp"

#include <numeric>
#include <string>

#include "costas/error.hpp"

namespace costas {

BlockLedger::BlockLedger(std::vector<std::uint64_t> capacities)
    : total_(std::accumulate(capacities.begin(), capacities.end(), std::uint64_t{0})),
      remaining_(std::move(capacities)),
      blocks_(remaining_.size()) {}

std::uint64_t BlockLedger::remaining_total() const noexcept {
  return std::accumulate(remaining_.begin(), remaining_.end(), std::uint64_t{0});
}

bool BlockLedger::try_place(const Permutation& q) {
  const std::size_t block = q.zero_based()[0];
  if (block >= remaining_.size() || remaining_[block] == 0) return false;
  if (!placed_.insert(q).second) return false;
  blocks_[block].push_back(q);
  --remaining_[block];
  return true;
}

std::uint64_t derive_count(const Ucfm& f) {
  const std::uint64_t count = f.column_sum(1);
  for (int j = 1; j <= f.order(); ++j) {
    if (f.column_sum(j) != count || f.row_sum(j) != count) {
      throw Error(ErrorKind::kInconsistentUcfm,
                  "line sums disagree: column 1 sums to " + std::to_string(count) +
                      ", line " + std::to_string(j) + " sums to " +
                      std::to_string(f.column_sum(j)) + "/" + std::to_string(f.row_sum(j)));
    }
  }
  return count;
}

ReconstructionResult reconstruct(const Ucfm& f, const ReconstructOptions& options) {
  const int n = f.order();
  if (!f.complete()) {
    throw Error(ErrorKind::kIncompleteUcfm, "reconstruction requires a complete UCFM");
  }
  if (n > options.max_order) {
    throw Error(ErrorKind::kOrderTooLarge, "order " + std::to_string(n) + " exceeds cap " +
                                               std::to_string(options.max_order));
  }
  derive_count(f);

  std::vector<std::uint64_t> capacities(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) capacities[std::size_t(v - 1)] = f.at(v, 1);
  BlockLedger ledger(std::move(capacities));

  std::uint64_t nodes = 0;
  std::size_t searched = 0;
  std::size_t early_breaks = 0;
  for (int first = 1; first <= n; ++first) {
    if (ledger.remaining(first) == 0) continue;  // filled by earlier polymorphs
    ++searched;
    bool stopped_early = false;
    nodes += search_first_element(
        n, first, options.forward_checking,
        [&](std::span<const Permutation::value_type> found) {
          auto p = Permutation::from_zero_based({found.begin(), found.end()});
          if (ledger.contains(p)) return true;
          for (const auto& q : polymorphs(p)) {
            if (ledger.try_place(q) && options.on_place) options.on_place(ledger, q);
          }
          if (ledger.remaining(first) == 0) {
            stopped_early = true;
            return false;
          }
          return true;
        });
    if (ledger.remaining(first) != 0) {
      throw Error(ErrorKind::kInconsistentUcfm,
                  "search for first element " + std::to_string(first) + " exhausted with " +
                      std::to_string(ledger.remaining(first)) + " rows unfilled");
    }
    if (stopped_early) ++early_breaks;
  }

  std::vector<Permutation> rows;
  rows.reserve(ledger.placed_count());
  for (const auto& block : ledger.blocks()) rows.insert(rows.end(), block.begin(), block.end());
  Ucm u(n, std::move(rows), true);
  if (!(build_ucfm(u) == f)) {
    throw Error(ErrorKind::kInconsistentUcfm,
                "reconstructed arrays do not reproduce the input frequency matrix");
  }
  return {std::move(u), nodes, searched, early_breaks};
}

}  // namespace costas

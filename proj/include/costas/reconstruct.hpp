#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "costas/permutation.hpp"
#include "costas/search.hpp"
#include "costas/ucm.hpp"

namespace costas {

/// Block capacities taken from the first column of a UCFM and the rows placed
/// so far. Capacities only decrease; placed rows only grow.
class BlockLedger {
 public:
  explicit BlockLedger(std::vector<std::uint64_t> capacities);

  int order() const noexcept { return int(remaining_.size()); }
  std::uint64_t total() const noexcept { return total_; }
  /// Remaining capacity of the block for 1-based first element.
  std::uint64_t remaining(int first) const { return remaining_.at(std::size_t(first - 1)); }
  std::uint64_t remaining_total() const noexcept;
  std::size_t placed_count() const noexcept { return placed_.size(); }
  bool contains(const Permutation& p) const { return placed_.contains(p); }

  /// Places `q` into its block when it is new and the block has room.
  bool try_place(const Permutation& q);

  /// Rows of each block in placement order.
  const std::vector<std::vector<Permutation>>& blocks() const noexcept { return blocks_; }

 private:
  std::uint64_t total_;
  std::vector<std::uint64_t> remaining_;
  std::vector<std::vector<Permutation>> blocks_;
  std::unordered_set<Permutation, PermutationHash> placed_;
};

struct ReconstructOptions {
  bool forward_checking = true;
  int max_order = kDefaultMaxOrder;
  /// Invoked after every placement.
  std::function<void(const BlockLedger&, const Permutation& placed)> on_place;
};

struct ReconstructionResult {
  Ucm ucm;
  std::uint64_t nodes = 0;          // search nodes over all block searches
  std::size_t blocks_searched = 0;  // blocks that needed their own search
  std::size_t early_breaks = 0;     // searches stopped once their block filled
};

/// C(n) as the sum of the first column. Throws kInconsistentUcfm unless every
/// row and column of `f` has that same sum.
std::uint64_t derive_count(const Ucfm& f);

/// Rebuilds the canonical UCM from a complete UCFM by block-bounded search
/// with polymorph placement.
/// Throws kIncompleteUcfm, kOrderTooLarge, or kInconsistentUcfm when a block
/// search exhausts before its block fills or the result does not reproduce f.
ReconstructionResult reconstruct(const Ucfm& f, const ReconstructOptions& options = {});

inline Ucm reconstruct_ucm(const Ucfm& f) { return reconstruct(f).ucm; }

}  // namespace costas

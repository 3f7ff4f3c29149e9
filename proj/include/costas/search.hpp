#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

/// Default factorial blow-up guard for exhaustive search.
inline constexpr int kDefaultMaxOrder = 20;
/// Hard limit of the bitmask representation (32-bit value mask, 64-bit
/// difference masks holding 2n-1 bits).
inline constexpr int kBitmaskMaxOrder = 32;

struct SearchOptions {
  /// 1-based first element restriction.
  std::optional<int> first_element;
  /// 1 runs the serial reference kernel; >1 runs the OpenMP kernel.
  int threads = 1;
  /// Reject placements that leave the next position without a legal value.
  bool forward_checking = true;
  int max_order = kDefaultMaxOrder;
};

struct EnumerationResult {
  std::vector<Permutation> arrays;  // lexicographically sorted
  std::uint64_t nodes = 0;          // accepted search-tree nodes

  std::size_t count() const noexcept { return arrays.size(); }
};

/// Backtracking state for one subtree. Difference delta at distance d is held
/// at bit delta + n - 1 of diff_masks[d].
class SearchState {
 public:
  explicit SearchState(int order);

  int order() const noexcept { return order_; }
  int depth() const noexcept { return depth_; }
  std::uint32_t used_values() const noexcept { return used_; }
  std::uint64_t diff_mask(int distance) const { return diff_masks_[distance]; }
  std::span<const Permutation::value_type> prefix() const {
    return {prefix_.data(), std::size_t(depth_)};
  }

  /// Bitmask of 0-based values that can legally occupy the next position.
  std::uint32_t candidates() const noexcept;
  /// `value` must be set in candidates().
  void place(int value) noexcept;
  void unplace() noexcept;

 private:
  int order_;
  int depth_ = 0;
  std::uint32_t used_ = 0;
  std::uint32_t full_;
  std::array<Permutation::value_type, kBitmaskMaxOrder> prefix_{};
  std::array<std::uint64_t, kBitmaskMaxOrder> diff_masks_{};
};

/// Called with each complete array (0-based values) in lexicographic order.
/// Returning false stops the search.
using ArrayVisitor = std::function<bool(std::span<const Permutation::value_type>)>;

/// Lazily searches the Costas arrays of order n whose first element is
/// `first_element` (1-based). Returns the number of nodes visited.
std::uint64_t search_first_element(int n, int first_element, bool forward_checking,
                                   const ArrayVisitor& visit);

EnumerationResult enumerate_costas(int n, const SearchOptions& options = {});

/// Searches first elements 1..ceil(n/2) only and closes the result under the
/// dihedral group. Set-equal to enumerate_costas(n); `first_element` is
/// ignored.
EnumerationResult enumerate_all_via_symmetry(int n, const SearchOptions& options = {});

namespace kernels {

/// Plain recursive search over the given 0-based first values.
EnumerationResult enumerate_serial(int n, std::span<const int> first_values,
                                   bool forward_checking);

/// Splits the tree into (first, second) prefixes and searches them with
/// OpenMP. Output and node count are identical to enumerate_serial.
EnumerationResult enumerate_parallel(int n, std::span<const int> first_values,
                                     bool forward_checking, int threads);

}  // namespace kernels

}  // namespace costas

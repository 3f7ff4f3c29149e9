#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costas/permutation.hpp"
#include "costas/search.hpp"

namespace costas {

/// Universal Costas Matrix: distinct Costas arrays of one order, one per row,
/// grouped into blocks by first element and lexicographic within a block.
/// Also used for partial array sets (complete() == false).
class UniversalCostasMatrix {
 public:
  /// Sorts `rows` into canonical order. Throws kMixedOrder, kNotCostas or
  /// kDuplicateRow when a row breaks the invariants.
  UniversalCostasMatrix(int order, std::vector<Permutation> rows, bool complete);

  int order() const noexcept { return order_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool complete() const noexcept { return complete_; }
  const std::vector<Permutation>& rows() const noexcept { return rows_; }
  /// Entry c_{m,k} with 1-based row m and column k.
  int at(std::size_t row, std::size_t col) const { return rows_[row - 1].value(col - 1); }

  /// Rows whose first element is `first` (1-based).
  std::span<const Permutation> block(int first) const;
  /// Number of rows in each block, index 0 is first element 1.
  const std::vector<std::size_t>& block_sizes() const noexcept { return block_sizes_; }
  /// 1-based index of the last row of each block (r_1..r_n); an empty block
  /// repeats the previous boundary.
  std::vector<std::size_t> block_ends() const;

  bool operator==(const UniversalCostasMatrix&) const = default;

 private:
  int order_;
  std::vector<Permutation> rows_;
  std::vector<std::size_t> block_sizes_;
  bool complete_;
};

/// n x n frequency counts f_{i,k}: how often value i sits in column k.
class UniversalCostasFrequencyMatrix {
 public:
  UniversalCostasFrequencyMatrix(int order, std::vector<std::uint64_t> row_major_counts,
                                 bool complete);

  int order() const noexcept { return order_; }
  bool complete() const noexcept { return complete_; }
  /// 1-based value i and column k.
  std::uint64_t at(int value, int column) const {
    return counts_[std::size_t(value - 1) * std::size_t(order_) + std::size_t(column - 1)];
  }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t max_count() const;
  std::uint64_t row_sum(int value) const;
  std::uint64_t column_sum(int column) const;
  /// True when every row sum and every column sum are equal.
  bool line_sums_equal() const;

  bool operator==(const UniversalCostasFrequencyMatrix&) const = default;

 private:
  int order_;
  std::vector<std::uint64_t> counts_;
  bool complete_;
};

using Ucm = UniversalCostasMatrix;
using Ucfm = UniversalCostasFrequencyMatrix;

/// All Costas arrays of order n in canonical form (complete).
Ucm build_ucm(int n, const SearchOptions& options = {});

/// Canonical UCM of exactly the given arrays. The result is marked complete
/// only when `known_count` is given and equals the number of arrays.
/// Throws kNotCostas, kDuplicateRow or kMixedOrder.
Ucm build_ucm_from_arrays(std::vector<Permutation> arrays,
                          std::optional<std::size_t> known_count = std::nullopt);

/// S(n,k) for 1-based column k.
std::uint64_t column_sum(const Ucm& u, int column);

Ucfm build_ucfm(const Ucm& u);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string observed;
};

struct VerificationReport {
  int order = 0;
  bool complete = false;
  std::uint64_t row_count = 0;   // C(n) for complete inputs
  std::uint64_t row_sum = 0;     // D(n) = n(n+1)/2
  std::uint64_t column_sum = 0;  // S(n) = S(n,1)
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
  std::string to_text() const;
};

/// Names of the checks in report order.
inline constexpr std::array<std::string_view, 6> kCheckNames = {
    "row-sums", "equal-column-sums", "sum-ratio",
    "ucfm-line-sums", "ucfm-symmetry", "weighted-column-sums",
};

/// Runs every structural check on a UCM and its frequency matrix.
/// Throws kOrderMismatch when the orders differ.
VerificationReport verify_theorems(const Ucm& u, const Ucfm& f);

}  // namespace costas

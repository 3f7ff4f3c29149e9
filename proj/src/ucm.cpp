#include "costas/ucm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "costas/error.hpp"

namespace costas {

UniversalCostasMatrix::UniversalCostasMatrix(int order, std::vector<Permutation> rows,
                                             bool complete)
    : order_(order), rows_(std::move(rows)), block_sizes_(std::size_t(std::max(order, 0)), 0),
      complete_(complete) {
  if (order < 1) throw Error(ErrorKind::kInvalidArgument, "UCM order must be >= 1");
  for (const auto& p : rows_) {
    if (p.order() != std::size_t(order)) {
      throw Error(ErrorKind::kMixedOrder, "row " + p.to_string() + " has order " +
                                              std::to_string(p.order()) + ", expected " +
                                              std::to_string(order));
    }
    if (!is_costas(p)) throw Error(ErrorKind::kNotCostas, "row is not Costas: " + p.to_string());
  }
  // Lexicographic order already groups rows by first element ascending.
  std::sort(rows_.begin(), rows_.end());
  auto dup = std::adjacent_find(rows_.begin(), rows_.end());
  if (dup != rows_.end()) {
    throw Error(ErrorKind::kDuplicateRow, "duplicate row: " + dup->to_string());
  }
  for (const auto& p : rows_) ++block_sizes_[p.zero_based()[0]];
}

std::span<const Permutation> UniversalCostasMatrix::block(int first) const {
  if (first < 1 || first > order_) {
    throw Error(ErrorKind::kInvalidArgument, "block index out of range");
  }
  std::size_t start = 0;
  for (int j = 0; j < first - 1; ++j) start += block_sizes_[j];
  return std::span<const Permutation>(rows_).subspan(start, block_sizes_[first - 1]);
}

std::vector<std::size_t> UniversalCostasMatrix::block_ends() const {
  std::vector<std::size_t> ends(block_sizes_.size());
  std::partial_sum(block_sizes_.begin(), block_sizes_.end(), ends.begin());
  return ends;
}

UniversalCostasFrequencyMatrix::UniversalCostasFrequencyMatrix(
    int order, std::vector<std::uint64_t> row_major_counts, bool complete)
    : order_(order), counts_(std::move(row_major_counts)), complete_(complete) {
  if (order < 1) throw Error(ErrorKind::kInvalidArgument, "UCFM order must be >= 1");
  if (counts_.size() != std::size_t(order) * std::size_t(order)) {
    throw Error(ErrorKind::kInvalidArgument, "UCFM cell count does not match order");
  }
}

std::uint64_t UniversalCostasFrequencyMatrix::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::uint64_t UniversalCostasFrequencyMatrix::row_sum(int value) const {
  std::uint64_t s = 0;
  for (int k = 1; k <= order_; ++k) s += at(value, k);
  return s;
}

std::uint64_t UniversalCostasFrequencyMatrix::column_sum(int column) const {
  std::uint64_t s = 0;
  for (int i = 1; i <= order_; ++i) s += at(i, column);
  return s;
}

bool UniversalCostasFrequencyMatrix::line_sums_equal() const {
  const std::uint64_t target = column_sum(1);
  for (int j = 1; j <= order_; ++j) {
    if (row_sum(j) != target || column_sum(j) != target) return false;
  }
  return true;
}

Ucm build_ucm(int n, const SearchOptions& options) {
  SearchOptions o = options;
  o.first_element.reset();
  auto found = enumerate_costas(n, o);
  return Ucm(n, std::move(found.arrays), true);
}

Ucm build_ucm_from_arrays(std::vector<Permutation> arrays,
                          std::optional<std::size_t> known_count) {
  if (arrays.empty()) throw Error(ErrorKind::kInvalidArgument, "no arrays given");
  const int n = int(arrays.front().order());
  const bool complete = known_count && *known_count == arrays.size();
  return Ucm(n, std::move(arrays), complete);
}

std::uint64_t column_sum(const Ucm& u, int column) {
  if (column < 1 || column > u.order()) {
    throw Error(ErrorKind::kColumnOutOfRange, "column " + std::to_string(column) +
                                                  " outside 1.." + std::to_string(u.order()));
  }
  std::uint64_t s = 0;
  for (const auto& row : u.rows()) s += std::uint64_t(row.value(std::size_t(column - 1)));
  return s;
}

Ucfm build_ucfm(const Ucm& u) {
  const auto n = std::size_t(u.order());
  std::vector<std::uint64_t> counts(n * n, 0);
  // Superposition of the binary matrices: each row adds one 1 per column.
  for (const auto& row : u.rows()) {
    const auto v = row.zero_based();
    for (std::size_t k = 0; k < n; ++k) ++counts[std::size_t(v[k]) * n + k];
  }
  return Ucfm(u.order(), std::move(counts), u.complete());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "order " << order << (complete ? " (complete)" : " (partial)") << "\n";
  os << "C(n) = " << row_count << "\n";
  os << "D(n) = " << row_sum << "\n";
  os << "S(n) = " << column_sum << "\n";
  if (row_count > 0) {
    os << "S(n)/C(n) = " << double(column_sum) / double(row_count) << "\n";
  }
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.observed << "\n";
  }
  return os.str();
}

namespace {

std::string join(const std::set<std::uint64_t>& values) {
  std::string s = "{";
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != values.begin()) s += ", ";
    s += std::to_string(*it);
  }
  return s + "}";
}

}  // namespace

VerificationReport verify_theorems(const Ucm& u, const Ucfm& f) {
  if (u.order() != f.order()) {
    throw Error(ErrorKind::kOrderMismatch, "UCM order " + std::to_string(u.order()) +
                                               " != UCFM order " + std::to_string(f.order()));
  }
  const int n = u.order();
  const std::uint64_t rows = u.row_count();
  const std::uint64_t expected_row_sum = std::uint64_t(n) * std::uint64_t(n + 1) / 2;

  VerificationReport report;
  report.order = n;
  report.complete = u.complete();
  report.row_count = rows;
  report.row_sum = expected_row_sum;
  report.column_sum = column_sum(u, 1);

  {
    std::set<std::uint64_t> sums;
    for (const auto& row : u.rows()) {
      std::uint64_t s = 0;
      for (auto v : row.zero_based()) s += v + 1u;
      sums.insert(s);
    }
    const bool ok = sums.empty() || (sums.size() == 1 && *sums.begin() == expected_row_sum);
    report.checks.push_back({"row-sums", ok,
                             "row sums " + join(sums) + ", D(n) = " +
                                 std::to_string(expected_row_sum)});
  }

  std::set<std::uint64_t> col_sums;
  for (int k = 1; k <= n; ++k) col_sums.insert(column_sum(u, k));
  report.checks.push_back(
      {"equal-column-sums", col_sums.size() == 1, "column sums " + join(col_sums)});

  {
    // S(n)/C(n) = (n+1)/2 in integers.
    const std::uint64_t lhs = 2 * report.column_sum;
    const std::uint64_t rhs = rows * std::uint64_t(n + 1);
    report.checks.push_back({"sum-ratio", col_sums.size() == 1 && lhs == rhs,
                             "2*S(n) = " + std::to_string(lhs) +
                                 ", C(n)*(n+1) = " + std::to_string(rhs)});
  }

  {
    std::set<std::uint64_t> sums;
    for (int j = 1; j <= n; ++j) {
      sums.insert(f.row_sum(j));
      sums.insert(f.column_sum(j));
    }
    const bool ok = sums.size() == 1 && *sums.begin() == rows;
    report.checks.push_back({"ucfm-line-sums", ok,
                             "row/column sums " + join(sums) + ", C(n) = " +
                                 std::to_string(rows)});
  }

  {
    std::size_t violations = 0;
    std::string first;
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        const int ri = n + 1 - i;
        const int rk = n + 1 - k;
        const std::uint64_t v = f.at(i, k);
        const std::uint64_t images[] = {f.at(ri, k), f.at(i, rk), f.at(ri, rk), f.at(k, i),
                                        f.at(rk, i), f.at(k, ri), f.at(rk, ri)};
        for (auto w : images) {
          if (w != v) {
            if (violations++ == 0) {
              first = " (first at f[" + std::to_string(i) + "," + std::to_string(k) + "])";
            }
            break;
          }
        }
      }
    }
    report.checks.push_back({"ucfm-symmetry", violations == 0,
                             std::to_string(violations) + " asymmetric cells" + first});
  }

  {
    std::set<std::uint64_t> sums;
    for (int m = 1; m <= n; ++m) {
      std::uint64_t s = 0;
      for (int k = 1; k <= n; ++k) s += std::uint64_t(k) * f.at(k, m);
      sums.insert(s);
    }
    const bool ok = sums.size() == 1 && *sums.begin() == report.column_sum;
    report.checks.push_back({"weighted-column-sums", ok,
                             "sum k*f[k,m] " + join(sums) + ", S(n) = " +
                                 std::to_string(report.column_sum)});
  }
  return report;
}

}  // namespace costas

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace costas {

/// A permutation of {1..n}. Values are held 0-based internally; every public
/// accessor that returns a value (and all text I/O) is 1-based.
class Permutation {
 public:
  using value_type = std::uint16_t;

  Permutation() = default;

  /// Throws Error(kInvalidPermutation) unless `values` is a bijection on 1..n.
  static Permutation from_values(std::span<const int> one_based);
  static Permutation from_values(std::initializer_list<int> one_based);
  /// Throws Error(kInvalidPermutation) unless `values` is a bijection on 0..n-1.
  static Permutation from_zero_based(std::vector<value_type> zero_based);

  std::size_t order() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// 1-based value at 0-based position `pos`.
  int value(std::size_t pos) const { return values_[pos] + 1; }
  std::span<const value_type> zero_based() const noexcept { return values_; }
  std::vector<int> to_vector() const;
  std::string to_string() const;  // "1 2 4 3"

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<value_type> v) : values_(std::move(v)) {}
  std::vector<value_type> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Signed differences p[k+d] - p[k], one row per distance d = 1..n-1.
class DifferenceTriangle {
 public:
  explicit DifferenceTriangle(const Permutation& p);

  std::size_t order() const noexcept { return order_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  /// Row for distance d, 1 <= d <= n-1.
  const std::vector<int>& row(std::size_t distance) const { return rows_.at(distance - 1); }
  bool rows_distinct() const;

 private:
  std::size_t order_;
  std::vector<std::vector<int>> rows_;
};

bool is_costas(const Permutation& p);
DifferenceTriangle difference_triangle(const Permutation& p);

/// The eight symmetries of the square acting on a permutation matrix. The
/// `Inverse*` members apply the matching non-inverse transform to p^-1.
enum class Dihedral : std::uint8_t {
  kIdentity,
  kComplement,
  kReverse,
  kReverseComplement,
  kInverse,
  kInverseComplement,
  kInverseReverse,
  kInverseReverseComplement,
};

inline constexpr std::array<Dihedral, 8> kAllDihedral = {
    Dihedral::kIdentity,          Dihedral::kComplement,
    Dihedral::kReverse,           Dihedral::kReverseComplement,
    Dihedral::kInverse,           Dihedral::kInverseComplement,
    Dihedral::kInverseReverse,    Dihedral::kInverseReverseComplement,
};

std::string_view to_string(Dihedral g);

Permutation inverse(const Permutation& p);
Permutation transform(const Permutation& p, Dihedral g);

/// Distinct images of a permutation under the dihedral group, in
/// kAllDihedral order with first occurrence kept.
class Orbit {
 public:
  explicit Orbit(std::vector<Permutation> members) : members_(std::move(members)) {}

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Permutation>& members() const noexcept { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<Permutation> members_;
};

/// Closure of `p` under all eight transforms. Defined for every order; for
/// n <= 2 the result has 1 or 2 members.
Orbit polymorphs(const Permutation& p);

/// Polymorph orbit of a Costas array of order >= 3 (size 4 or 8).
/// Throws kDegenerateOrder for n <= 2 and kNotCostas for non-Costas input.
Orbit orbit(const Permutation& p);

}  // namespace costas

#include "costas/permutation.hpp"

#include <algorithm>
#include <unordered_set>

#include "costas/error.hpp"

namespace costas {

namespace {

bool is_bijection(std::span<const Permutation::value_type> v) {
  std::vector<bool> seen(v.size(), false);
  for (auto x : v) {
    if (x >= v.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

Permutation Permutation::from_values(std::span<const int> one_based) {
  std::vector<value_type> v;
  v.reserve(one_based.size());
  for (int x : one_based) {
    if (x < 1 || static_cast<std::size_t>(x) > one_based.size()) {
      throw Error(ErrorKind::kInvalidPermutation,
                  "value " + std::to_string(x) + " outside 1.." +
                      std::to_string(one_based.size()));
    }
    v.push_back(static_cast<value_type>(x - 1));
  }
  return from_zero_based(std::move(v));
}

Permutation Permutation::from_values(std::initializer_list<int> one_based) {
  return from_values(std::span<const int>(one_based.begin(), one_based.size()));
}

Permutation Permutation::from_zero_based(std::vector<value_type> zero_based) {
  if (!is_bijection(zero_based)) {
    throw Error(ErrorKind::kInvalidPermutation, "values are not a permutation");
  }
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::to_vector() const {
  std::vector<int> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](value_type v) { return int(v) + 1; });
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(values_[k] + 1);
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the 16-bit values.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.zero_based()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

DifferenceTriangle::DifferenceTriangle(const Permutation& p) : order_(p.order()) {
  const auto v = p.zero_based();
  const std::size_t n = v.size();
  if (n > 1) rows_.resize(n - 1);
  for (std::size_t d = 1; d < n; ++d) {
    auto& row = rows_[d - 1];
    row.reserve(n - d);
    for (std::size_t k = 0; k + d < n; ++k) row.push_back(int(v[k + d]) - int(v[k]));
  }
}

bool DifferenceTriangle::rows_distinct() const {
  // Differences lie in [-(n-1), n-1]; index by delta + n - 1.
  std::vector<std::uint32_t> stamp(order_ == 0 ? 1 : 2 * order_ - 1, 0);
  std::uint32_t epoch = 0;
  for (const auto& row : rows_) {
    ++epoch;
    for (int delta : row) {
      auto& s = stamp[std::size_t(delta + int(order_) - 1)];
      if (s == epoch) return false;
      s = epoch;
    }
  }
  return true;
}

DifferenceTriangle difference_triangle(const Permutation& p) { return DifferenceTriangle(p); }

bool is_costas(const Permutation& p) {
  const auto v = p.zero_based();
  const std::size_t n = v.size();
  if (n > 32) return DifferenceTriangle(p).rows_distinct();
  for (std::size_t d = 1; d < n; ++d) {
    std::uint64_t seen = 0;
    for (std::size_t k = 0; k + d < n; ++k) {
      const auto bit = std::uint64_t{1} << (int(v[k + d]) - int(v[k]) + int(n) - 1);
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

std::string_view to_string(Dihedral g) {
  switch (g) {
    case Dihedral::kIdentity: return "identity";
    case Dihedral::kComplement: return "complement";
    case Dihedral::kReverse: return "reverse";
    case Dihedral::kReverseComplement: return "reverse-complement";
    case Dihedral::kInverse: return "inverse";
    case Dihedral::kInverseComplement: return "inverse-complement";
    case Dihedral::kInverseReverse: return "inverse-reverse";
    case Dihedral::kInverseReverseComplement: return "inverse-reverse-complement";
  }
  return "unknown";
}

Permutation inverse(const Permutation& p) {
  const auto v = p.zero_based();
  std::vector<Permutation::value_type> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[v[k]] = static_cast<Permutation::value_type>(k);
  return Permutation::from_zero_based(std::move(out));
}

Permutation transform(const Permutation& p, Dihedral g) {
  const auto idx = static_cast<unsigned>(g);
  const bool inv = idx >= 4;
  const bool complement = idx & 1u;
  const bool reverse = idx & 2u;

  const Permutation base = inv ? inverse(p) : p;
  const auto v = base.zero_based();
  const std::size_t n = v.size();
  std::vector<Permutation::value_type> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto x = v[reverse ? n - 1 - k : k];
    out[k] = complement ? static_cast<Permutation::value_type>(n - 1 - x) : x;
  }
  return Permutation::from_zero_based(std::move(out));
}

Orbit polymorphs(const Permutation& p) {
  std::vector<Permutation> members;
  members.reserve(8);
  for (Dihedral g : kAllDihedral) {
    Permutation q = transform(p, g);
    if (std::find(members.begin(), members.end(), q) == members.end()) {
      members.push_back(std::move(q));
    }
  }
  return Orbit(std::move(members));
}

Orbit orbit(const Permutation& p) {
  if (p.order() <= 2) {
    throw Error(ErrorKind::kDegenerateOrder,
                "orbit of order " + std::to_string(p.order()) +
                    " is degenerate (size 1 or 2); use polymorphs()");
  }
  if (!is_costas(p)) {
    throw Error(ErrorKind::kNotCostas, "orbit seed is not Costas: " + p.to_string());
  }
  return polymorphs(p);
}

}  // namespace costas

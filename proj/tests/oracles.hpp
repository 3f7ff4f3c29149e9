#pragma once

// Independent reference implementations for tests. Nothing here uses the
// bitmask search, the difference-triangle code or the library transforms.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 1-based values
using Grid = std::vector<std::vector<int>>;

/// Permutation matrix with a 1 at (row = value, col = position).
inline Grid to_grid(const Perm& p) {
  const int n = int(p.size());
  Grid g(n, std::vector<int>(n, 0));
  for (int k = 0; k < n; ++k) g[p[k] - 1][k] = 1;
  return g;
}

inline Perm from_grid(const Grid& g) {
  const int n = int(g.size());
  Perm p(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (g[r][c]) p[c] = r + 1;
  return p;
}

/// O(n^4) definition check: the vectors between every two 1s are distinct.
inline bool is_costas_by_vectors(const Perm& p) {
  const Grid g = to_grid(p);
  const int n = int(g.size());
  std::vector<std::pair<int, int>> ones;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (g[r][c]) ones.emplace_back(r, c);
  for (std::size_t a = 0; a < ones.size(); ++a)
    for (std::size_t b = 0; b < ones.size(); ++b) {
      if (a == b) continue;
      for (std::size_t x = 0; x < ones.size(); ++x)
        for (std::size_t y = 0; y < ones.size(); ++y) {
          if (x == y || (a == x && b == y)) continue;
          if (ones[b].first - ones[a].first == ones[y].first - ones[x].first &&
              ones[b].second - ones[a].second == ones[y].second - ones[x].second)
            return false;
        }
    }
  return true;
}

/// Every Costas permutation of order n by filtering all n! permutations,
/// in lexicographic order.
inline std::vector<Perm> all_costas(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    if (is_costas_by_vectors(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Grid rotate90(const Grid& g) {
  const int n = int(g.size());
  Grid r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[j][n - 1 - i] = g[i][j];
  return r;
}

inline Grid transpose(const Grid& g) {
  const int n = int(g.size());
  Grid t(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = g[i][j];
  return t;
}

/// Orbit under the symmetries of the square, computed on the binary matrix.
inline std::set<Perm> dihedral_closure(const Perm& p) {
  std::set<Perm> out;
  Grid g = to_grid(p);
  for (int r = 0; r < 4; ++r) {
    out.insert(from_grid(g));
    out.insert(from_grid(transpose(g)));
    g = rotate90(g);
  }
  return out;
}

/// f[i][k] = number of rows with value i+1 in column k.
inline std::vector<std::vector<long>> count_frequencies(const std::vector<Perm>& rows, int n) {
  std::vector<std::vector<long>> f(n, std::vector<long>(n, 0));
  for (const auto& r : rows)
    for (int k = 0; k < n; ++k) ++f[r[k] - 1][k];
  return f;
}

}  // namespace oracle

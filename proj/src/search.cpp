#include "costas/search.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "costas/error.hpp"

namespace costas {

SearchState::SearchState(int order)
    : order_(order), full_(order >= 32 ? ~0u : ((1u << order) - 1u)) {}

std::uint32_t SearchState::candidates() const noexcept {
  // Value w is blocked at distance d if w - prefix[depth-d] is already a
  // difference at that distance: shift the mask so bit w lines up.
  std::uint64_t blocked = used_;
  const int k = depth_;
  for (int d = 1; d <= k; ++d) {
    const int base = prefix_[k - d];
    blocked |= diff_masks_[d] >> (order_ - 1 - base);
  }
  return full_ & ~static_cast<std::uint32_t>(blocked);
}

void SearchState::place(int value) noexcept {
  const int k = depth_;
  for (int d = 1; d <= k; ++d) {
    diff_masks_[d] |= std::uint64_t{1} << (value - prefix_[k - d] + order_ - 1);
  }
  prefix_[k] = static_cast<Permutation::value_type>(value);
  used_ |= 1u << value;
  ++depth_;
}

void SearchState::unplace() noexcept {
  const int k = --depth_;
  const int value = prefix_[k];
  used_ &= ~(1u << value);
  for (int d = 1; d <= k; ++d) {
    diff_masks_[d] &= ~(std::uint64_t{1} << (value - prefix_[k - d] + order_ - 1));
  }
}

namespace {

struct Walker {
  SearchState& state;
  bool forward_checking;
  const ArrayVisitor* visit;  // null collects into `out`
  std::vector<Permutation>* out;
  std::uint64_t nodes = 0;
  bool stopped = false;

  bool emit() {
    std::vector<Permutation::value_type> v(state.prefix().begin(), state.prefix().end());
    if (visit) return (*visit)(v);
    out->push_back(Permutation::from_zero_based(std::move(v)));
    return true;
  }

  // Tries `value` at the current depth; recurses when accepted.
  void descend(int value) {
    const int n = state.order();
    state.place(value);
    if (state.depth() == n) {
      ++nodes;
      if (!emit()) stopped = true;
    } else {
      const std::uint32_t next = state.candidates();
      if (next != 0 || !forward_checking) {
        ++nodes;
        expand(next);
      }
    }
    state.unplace();
  }

  void expand(std::uint32_t cands) {
    while (cands != 0 && !stopped) {
      const int v = std::countr_zero(cands);
      cands &= cands - 1;
      descend(v);
    }
  }
};

void check_order(int n, int max_order) {
  if (max_order < 1 || max_order > kBitmaskMaxOrder) {
    throw Error(ErrorKind::kInvalidArgument,
                "max order must be in 1.." + std::to_string(kBitmaskMaxOrder));
  }
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "order must be >= 1");
  if (n > max_order) {
    throw Error(ErrorKind::kOrderTooLarge, "order " + std::to_string(n) +
                                               " exceeds cap " + std::to_string(max_order));
  }
}

EnumerationResult run(int n, std::span<const int> firsts, const SearchOptions& options) {
  if (options.threads > 1) {
    return kernels::enumerate_parallel(n, firsts, options.forward_checking, options.threads);
  }
  return kernels::enumerate_serial(n, firsts, options.forward_checking);
}

}  // namespace

std::uint64_t search_first_element(int n, int first_element, bool forward_checking,
                                   const ArrayVisitor& visit) {
  check_order(n, kBitmaskMaxOrder);
  if (first_element < 1 || first_element > n) {
    throw Error(ErrorKind::kInvalidArgument, "first element out of range");
  }
  SearchState state(n);
  Walker w{state, forward_checking, &visit, nullptr};
  w.descend(first_element - 1);
  return w.nodes;
}

namespace kernels {

EnumerationResult enumerate_serial(int n, std::span<const int> first_values,
                                   bool forward_checking) {
  EnumerationResult result;
  SearchState state(n);
  Walker w{state, forward_checking, nullptr, &result.arrays};
  for (int f : first_values) w.descend(f);
  result.nodes = w.nodes;
  return result;
}

EnumerationResult enumerate_parallel(int n, std::span<const int> first_values,
                                     bool forward_checking, int threads) {
  if (n < 3) return enumerate_serial(n, first_values, forward_checking);

  // Depth 0 never fails the look-ahead, so each first value is one node and
  // every (first, second) pair roots an independent subtree.
  struct Task {
    int first;
    int second;
  };
  std::vector<Task> tasks;
  for (int f : first_values) {
    for (int s = 0; s < n; ++s) {
      if (s != f) tasks.push_back({f, s});
    }
  }

  std::vector<std::vector<Permutation>> found(tasks.size());
  std::vector<std::uint64_t> nodes(tasks.size(), 0);
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < task_count; ++t) {
    SearchState state(n);
    state.place(tasks[t].first);
    Walker w{state, forward_checking, nullptr, &found[t]};
    w.descend(tasks[t].second);
    nodes[t] = w.nodes;
  }

  EnumerationResult result;
  result.nodes = first_values.size();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    result.nodes += nodes[t];
    std::move(found[t].begin(), found[t].end(), std::back_inserter(result.arrays));
  }
  return result;
}

}  // namespace kernels

EnumerationResult enumerate_costas(int n, const SearchOptions& options) {
  check_order(n, options.max_order);
  std::vector<int> firsts;
  if (options.first_element) {
    const int f = *options.first_element;
    if (f < 1 || f > n) {
      throw Error(ErrorKind::kInvalidArgument, "first element " + std::to_string(f) +
                                                   " outside 1.." + std::to_string(n));
    }
    firsts.push_back(f - 1);
  } else {
    for (int f = 0; f < n; ++f) firsts.push_back(f);
  }
  return run(n, firsts, options);
}

EnumerationResult enumerate_all_via_symmetry(int n, const SearchOptions& options) {
  check_order(n, options.max_order);
  std::vector<int> firsts;
  for (int f = 0; f < (n + 1) / 2; ++f) firsts.push_back(f);
  EnumerationResult seeds = run(n, firsts, options);

  EnumerationResult result;
  result.nodes = seeds.nodes;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& p : seeds.arrays) {
    for (const auto& q : polymorphs(p)) {
      if (seen.insert(q).second) result.arrays.push_back(q);
    }
  }
  std::sort(result.arrays.begin(), result.arrays.end());
  return result;
}

}  // namespace costas

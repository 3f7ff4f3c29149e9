#include <doctest.h>

#include <random>

#include "costas/error.hpp"
#include "costas/ucm.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using costas::Permutation;

namespace {

std::vector<Permutation> perms(const std::vector<std::vector<int>>& rows) {
  std::vector<Permutation> out;
  for (const auto& r : rows) out.push_back(Permutation::from_values(r));
  return out;
}

costas::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const costas::Error& e) {
    return e.kind();
  }
  FAIL("expected costas::Error");
  return costas::ErrorKind::kIo;
}

}  // namespace

TEST_CASE("build_ucm(4) is the canonical U4") {
  const auto u = costas::build_ucm(4);
  CHECK(u.rows() == perms(fixtures::kU4));
  CHECK(u.complete());
  CHECK(u.block_sizes() == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(u.block_ends() == std::vector<std::size_t>{3, 6, 9, 12});
  CHECK(u.block(2).size() == 3);
  CHECK(u.block(2)[0] == Permutation::from_values({2, 1, 3, 4}));
  CHECK(u.at(4, 1) == 2);
  CHECK(u.at(5, 3) == 1);
}

TEST_CASE("small UCMs") {
  const auto u1 = costas::build_ucm(1);
  CHECK(u1.rows() == perms({{1}}));
  const auto u3 = costas::build_ucm(3);
  CHECK(u3.rows() == perms({{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}}));
  CHECK(u3.block_sizes() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("build_ucm_from_arrays canonicalizes") {
  auto rows = perms(fixtures::kU4);
  std::mt19937 rng(7);
  std::shuffle(rows.begin(), rows.end(), rng);
  const auto u = costas::build_ucm_from_arrays(rows, 12);
  CHECK(u == costas::build_ucm(4));
  CHECK_FALSE(costas::build_ucm_from_arrays(rows).complete());
  CHECK_FALSE(costas::build_ucm_from_arrays(rows, 13).complete());

  const auto single = costas::build_ucm_from_arrays(perms({{1, 3, 2}}));
  CHECK(single.row_count() == 1);
  CHECK(single.block_sizes() == std::vector<std::size_t>{1, 0, 0});
  CHECK(single.block_ends() == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("build_ucm_from_arrays errors") {
  CHECK(kind_of([] { costas::build_ucm_from_arrays(perms({{1, 2, 3}})); }) ==
        costas::ErrorKind::kNotCostas);
  CHECK(kind_of([] { costas::build_ucm_from_arrays(perms({{1, 3, 2}, {1, 3, 2}})); }) ==
        costas::ErrorKind::kDuplicateRow);
  CHECK(kind_of([] { costas::build_ucm_from_arrays(perms({{1, 3, 2}, {1, 2, 4, 3}})); }) ==
        costas::ErrorKind::kMixedOrder);
  CHECK(kind_of([] { costas::build_ucm_from_arrays({}); }) == costas::ErrorKind::kInvalidArgument);
}

TEST_CASE("column sums") {
  const auto u4 = costas::build_ucm(4);
  const auto u5 = costas::build_ucm(5);
  for (int k = 1; k <= 4; ++k) CHECK(costas::column_sum(u4, k) == 30);
  for (int k = 1; k <= 5; ++k) CHECK(costas::column_sum(u5, k) == 120);
  CHECK(costas::column_sum(costas::build_ucm(1), 1) == 1);
  CHECK(kind_of([&] { costas::column_sum(u4, 0); }) == costas::ErrorKind::kColumnOutOfRange);
  CHECK(kind_of([&] { costas::column_sum(u4, 5); }) == costas::ErrorKind::kColumnOutOfRange);
}

TEST_CASE("UCFM golden matrices") {
  CHECK(costas::build_ucfm(costas::build_ucm(5)) == costas::Ucfm(5, fixtures::kF5, true));
  const auto f6 = costas::build_ucfm(costas::build_ucm(6));
  CHECK(f6 == costas::Ucfm(6, fixtures::kF6, true));
  CHECK(f6.at(1, 1) == 19);
  CHECK(f6.at(2, 2) == 24);
  CHECK(costas::build_ucfm(costas::build_ucm(4)) ==
        costas::Ucfm(4, std::vector<std::uint64_t>(16, 3), true));
}

TEST_CASE("UCFM equals independent frequency count (3 <= n <= 7)") {
  for (int n = 3; n <= 7; ++n) {
    const auto f = costas::build_ucfm(costas::build_ucm(n));
    const auto expect = oracle::count_frequencies(oracle::all_costas(n), n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) CHECK(f.at(i, k) == std::uint64_t(expect[i - 1][k - 1]));
  }
}

TEST_CASE("verify_theorems on complete UCMs") {
  const auto u6 = costas::build_ucm(6);
  const auto r6 = costas::verify_theorems(u6, costas::build_ucfm(u6));
  CHECK(r6.all_passed());
  CHECK(r6.column_sum == 406);
  CHECK(r6.row_count == 116);
  CHECK(r6.row_sum == 21);
  CHECK(double(r6.column_sum) / double(r6.row_count) == 3.5);
  REQUIRE(r6.checks.size() == costas::kCheckNames.size());
  for (std::size_t i = 0; i < r6.checks.size(); ++i) CHECK(r6.checks[i].name == costas::kCheckNames[i]);

  const auto u4 = costas::build_ucm(4);
  const auto r4 = costas::verify_theorems(u4, costas::build_ucfm(u4));
  CHECK(r4.all_passed());
  CHECK(double(r4.column_sum) / double(r4.row_count) == 2.5);
}

TEST_CASE("single orbit is a symmetric partial UCM") {
  const auto o = costas::orbit(Permutation::from_values({1, 2, 4, 3}));
  const auto u = costas::build_ucm_from_arrays(o.members());
  CHECK_FALSE(u.complete());
  CHECK(u.row_count() == 4);
  for (int k = 1; k <= 4; ++k) CHECK(costas::column_sum(u, k) == 10);  // |O|/2 * (n+1)
  const auto report = costas::verify_theorems(u, costas::build_ucfm(u));
  CHECK(report.find("ucfm-symmetry")->passed);
  CHECK(report.find("equal-column-sums")->passed);
  CHECK(report.all_passed());

  for (auto seed : {std::vector<int>{1, 3, 4, 2, 5}, std::vector<int>{1, 4, 3, 5, 2}}) {
    const auto o = costas::orbit(Permutation::from_values(seed));
    const auto part = costas::build_ucm_from_arrays(o.members());
    for (int k = 1; k <= 5; ++k) CHECK(costas::column_sum(part, k) == o.size() / 2 * 6);
    CHECK(costas::verify_theorems(part, costas::build_ucfm(part)).all_passed());
  }
}

TEST_CASE("verify_theorems flags asymmetric partial sets") {
  const auto u = costas::build_ucm_from_arrays(perms({{1, 2, 4, 3}, {1, 3, 4, 2}}));
  const auto report = costas::verify_theorems(u, costas::build_ucfm(u));
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(report.find("ucfm-symmetry")->passed);
  CHECK_FALSE(report.find("equal-column-sums")->passed);
  CHECK(report.find("row-sums")->passed);
  CHECK(report.to_text().find("FAIL ucfm-symmetry") != std::string::npos);

  CHECK(kind_of([&] { costas::verify_theorems(u, costas::build_ucfm(costas::build_ucm(5))); }) ==
        costas::ErrorKind::kOrderMismatch);
}

TEST_CASE("structural theorems hold for 3 <= n <= 10") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const auto u = costas::build_ucm(n);
    const auto f = costas::build_ucfm(u);
    const auto report = costas::verify_theorems(u, f);
    CHECK(report.all_passed());
    CHECK(report.row_count == fixtures::kCount[n]);
    CHECK(report.column_sum == fixtures::kColumnSum[n]);
    CHECK(2 * report.column_sum == report.row_count * std::uint64_t(n + 1));
    for (const auto& row : u.rows()) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += row.value(k);
      CHECK(s == n * (n + 1) / 2);
    }
    // Round trip through the array-list constructor.
    CHECK(costas::build_ucm_from_arrays(u.rows(), u.row_count()) == u);
  }
}

TEST_CASE("UCFM accessors") {
  const costas::Ucfm f(2, {1, 2, 3, 0}, false);
  CHECK(f.max_count() == 3);
  CHECK(f.row_sum(1) == 3);
  CHECK(f.column_sum(1) == 4);
  CHECK_FALSE(f.line_sums_equal());
  CHECK(kind_of([] { costas::Ucfm(2, {1, 2, 3}, false); }) == costas::ErrorKind::kInvalidArgument);
}

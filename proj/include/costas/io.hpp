#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "costas/permutation.hpp"
#include "costas/ucm.hpp"

namespace costas::io {

struct ArrayList {
  std::vector<Permutation> arrays;
  std::vector<std::string> warnings;  // e.g. duplicate lines
};

struct ReadArraysOptions {
  bool require_costas = false;
};

/// One permutation per line, space separated, 1-based. '#' starts a comment
/// line; blank lines are skipped. Throws kParse (with line number),
/// kInvalidPermutation, kMixedOrder or kNotCostas.
ArrayList parse_arrays(std::istream& in, const ReadArraysOptions& options = {});
ArrayList read_arrays(const std::filesystem::path& path, const ReadArraysOptions& options = {});

void format_arrays(std::ostream& out, const std::vector<Permutation>& arrays);
void write_arrays(const std::filesystem::path& path, const std::vector<Permutation>& arrays);

/// n lines of n comma separated counts. Completeness is recomputed as
/// "all line sums equal". Throws kParse for non-square, non-integer or
/// negative cells.
Ucfm parse_ucfm(std::istream& in);
Ucfm read_ucfm(const std::filesystem::path& path);

void format_ucfm(std::ostream& out, const Ucfm& f);
void write_ucfm(const std::filesystem::path& path, const Ucfm& f);

/// Binary PGM (P5), n x n, maxval 255. Row i holds value i; pixel is
/// floor(255 * f / max(F) + 0.5), all zero when max(F) == 0.
std::vector<std::uint8_t> render_heatmap(const Ucfm& f);
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace costas::io

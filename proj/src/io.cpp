#include "costas/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "costas/error.hpp"

namespace costas::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

}  // namespace

ArrayList parse_arrays(std::istream& in, const ReadArraysOptions& options) {
  ArrayList result;
  std::unordered_map<Permutation, std::size_t, PermutationHash> first_seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      auto end = line.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = line.size();
      const auto token = line.substr(pos, end - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::kParse, at_line(line_no, "not an integer: '" +
                                                            std::string(token) + "'"));
      }
      values.push_back(v);
      pos = end;
    }

    Permutation p;
    try {
      p = Permutation::from_values(values);
    } catch (const Error& e) {
      throw Error(e.kind(), at_line(line_no, e.what()));
    }
    if (!result.arrays.empty() && p.order() != result.arrays.front().order()) {
      throw Error(ErrorKind::kMixedOrder,
                  at_line(line_no, "order " + std::to_string(p.order()) + " differs from " +
                                       std::to_string(result.arrays.front().order())));
    }
    if (options.require_costas && !is_costas(p)) {
      throw Error(ErrorKind::kNotCostas, at_line(line_no, "not Costas: " + p.to_string()));
    }
    auto [it, inserted] = first_seen.emplace(p, line_no);
    if (!inserted) {
      result.warnings.push_back(
          at_line(line_no, "duplicate of line " + std::to_string(it->second)));
    }
    result.arrays.push_back(std::move(p));
  }
  return result;
}

ArrayList read_arrays(const std::filesystem::path& path, const ReadArraysOptions& options) {
  auto in = open_in(path);
  return parse_arrays(in, options);
}

void format_arrays(std::ostream& out, const std::vector<Permutation>& arrays) {
  for (const auto& p : arrays) out << p.to_string() << '\n';
}

void write_arrays(const std::filesystem::path& path, const std::vector<Permutation>& arrays) {
  auto out = open_out(path);
  format_arrays(out, arrays);
  finish(out, path);
}

Ucfm parse_ucfm(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) lines.push_back(raw);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty UCFM");

  const std::size_t n = lines.size();
  std::vector<std::uint64_t> counts;
  counts.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string_view line = lines[r];
    std::size_t cells = 0;
    std::size_t pos = 0;
    while (true) {
      auto comma = line.find(',', pos);
      const auto cell = trim(line.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos));
      if (!cell.empty() && cell.front() == '-') {
        throw Error(ErrorKind::kParse, at_line(r + 1, "negative cell '" + std::string(cell) + "'"));
      }
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw Error(ErrorKind::kParse,
                    at_line(r + 1, "non-integer cell '" + std::string(cell) + "'"));
      }
      counts.push_back(v);
      ++cells;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (cells != n) {
      throw Error(ErrorKind::kParse, at_line(r + 1, "expected " + std::to_string(n) +
                                                        " cells, found " + std::to_string(cells) +
                                                        " (UCFM must be square)"));
    }
  }
  Ucfm probe(int(n), counts, false);
  const bool complete = probe.line_sums_equal();
  return Ucfm(int(n), std::move(counts), complete);
}

Ucfm read_ucfm(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_ucfm(in);
}

void format_ucfm(std::ostream& out, const Ucfm& f) {
  for (int i = 1; i <= f.order(); ++i) {
    for (int k = 1; k <= f.order(); ++k) {
      if (k > 1) out << ',';
      out << f.at(i, k);
    }
    out << '\n';
  }
}

void write_ucfm(const std::filesystem::path& path, const Ucfm& f) {
  auto out = open_out(path);
  format_ucfm(out, f);
  finish(out, path);
}

std::vector<std::uint8_t> render_heatmap(const Ucfm& f) {
  const int n = f.order();
  const std::string header = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(bytes.size() + std::size_t(n) * std::size_t(n));
  const std::uint64_t max = f.max_count();
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      // floor(255 f / max + 1/2) == floor((510 f + max) / (2 max))
      const std::uint64_t px = max == 0 ? 0 : (510 * f.at(i, k) + max) / (2 * max);
      bytes.push_back(static_cast<std::uint8_t>(px));
    }
  }
  return bytes;
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  auto out = open_out(path);
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  finish(out, path);
}

}  // namespace costas::io

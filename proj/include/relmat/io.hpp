#pragma once

/**
 * Flat-file formats for relations.
 *
 * Matrix form: an optional header line `elements: a b c`, then n lines of n
 * space-separated 0/1 tokens. Pairs form: the header line is required, then
 * one `a b` pair per line. In both forms `#` starts a comment line and blank
 * lines are ignored. Output is canonical and byte-stable: single spaces,
 * newline-terminated rows, header written only when the labels differ from
 * the default "1".."n" (pairs output always carries the header, since pairs
 * input requires it).
 *
 * Files are read as matrix form unless their name ends in `.pairs`.
 */

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "relmat/errors.hpp"
#include "relmat/relation.hpp"

namespace relmat::io {

namespace detail {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

[[noreturn]] inline void fail(std::string_view source, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ": " << msg;
  throw ParseError(os.str());
}

/// All non-blank, non-comment lines, tokenized on whitespace.
inline std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

inline bool is_header(const Line& line) { return line.tokens.front() == "elements:"; }

inline std::vector<std::string> header_labels(const Line& line) {
  return {line.tokens.begin() + 1, line.tokens.end()};
}

}  // namespace detail

/// Parses matrix form. `source` names the input in error messages.
inline Relation read_matrix(std::istream& in, std::string_view source = "<input>") {
  auto lines = detail::data_lines(in);
  std::optional<std::vector<std::string>> labels;
  std::size_t start = 0;
  if (!lines.empty() && detail::is_header(lines[0])) {
    labels = detail::header_labels(lines[0]);
    start = 1;
  }
  const std::size_t rows_given = lines.size() - start;
  const std::size_t n = labels ? labels->size() : rows_given;
  if (rows_given != n)
    detail::fail(source, lines.empty() ? 1 : lines.back().number,
                 "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(rows_given));
  std::vector<std::vector<int>> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[start + i];
    if (line.tokens.size() != n)
      detail::fail(source, line.number,
                   "expected " + std::to_string(n) + " entries, found " +
                       std::to_string(line.tokens.size()));
    for (const std::string& tok : line.tokens) {
      if (tok == "0")
        grid[i].push_back(0);
      else if (tok == "1")
        grid[i].push_back(1);
      else
        detail::fail(source, line.number, "entry '" + tok + "' is not 0 or 1");
    }
  }
  try {
    return Relation::from_matrix(grid, std::move(labels));
  } catch (const Error& e) {
    detail::fail(source, lines.empty() ? 1 : lines[0].number, e.what());
  }
}

/// Parses pairs form (header mandatory).
inline Relation read_pairs(std::istream& in, std::string_view source = "<input>") {
  auto lines = detail::data_lines(in);
  if (lines.empty() || !detail::is_header(lines[0]))
    detail::fail(source, lines.empty() ? 1 : lines[0].number,
                 "pairs input must start with an 'elements:' header");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2)
      detail::fail(source, line.number, "expected a pair 'a b', found " +
                                            std::to_string(line.tokens.size()) + " tokens");
    pairs.emplace_back(line.tokens[0], line.tokens[1]);
  }
  try {
    return Relation::from_pairs(detail::header_labels(lines[0]), pairs);
  } catch (const Error& e) {
    detail::fail(source, lines[0].number, e.what());
  }
}

inline Relation read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  if (path.extension() == ".pairs") return read_pairs(in, path.string());
  return read_matrix(in, path.string());
}

inline void write_matrix(std::ostream& out, const Relation& r) {
  const IndexSet& ix = r.index_set();
  if (!ix.is_numbered()) {
    out << "elements:";
    for (const std::string& l : ix.labels()) out << ' ' << l;
    out << '\n';
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << ' ';
      out << (r.test(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

inline void write_pairs(std::ostream& out, const Relation& r) {
  out << "elements:";
  for (const std::string& l : r.index_set().labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [a, b] : r.pairs()) out << a << ' ' << b << '\n';
}

inline void write_file(const std::filesystem::path& path, const Relation& r) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  if (path.extension() == ".pairs")
    write_pairs(out, r);
  else
    write_matrix(out, r);
}

}  // namespace relmat::io

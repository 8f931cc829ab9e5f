#pragma once

// Shared helpers for the test suite: data/golden file access and seeded
// random relation generators. Every generator takes the caller's engine so
// individual tests stay reproducible in isolation.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "relmat/relmat.hpp"

namespace test_util {

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(RELMAT_TEST_DIR) / "data" / name;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string golden(const std::string& name) {
  return read_text(std::filesystem::path(RELMAT_TEST_DIR) / "golden" / name);
}

/// Bit (i, j) of the row-major mask becomes entry (i, j).
inline relmat::Relation relation_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<relmat::BitVec> rows(n, relmat::BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1u) rows[i].set(j);
  return relmat::Relation::from_rows(relmat::IndexSet::numbered(n), std::move(rows));
}

inline relmat::Relation random_relation(std::mt19937& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<relmat::BitVec> rows(n, relmat::BitVec(n));
  for (auto& row : rows)
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) row.set(j);
  return relmat::Relation::from_rows(relmat::IndexSet::numbered(n), std::move(rows));
}

inline std::string matrix_text(const relmat::Relation& r) {
  std::ostringstream out;
  relmat::io::write_matrix(out, r);
  return out.str();
}

inline std::vector<relmat::Relation> sorted(std::vector<relmat::Relation> rs) {
  std::sort(rs.begin(), rs.end(),
            [](const relmat::Relation& a, const relmat::Relation& b) { return a < b; });
  return rs;
}

}  // namespace test_util

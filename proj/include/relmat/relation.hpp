#pragma once

/**
 * Finite index sets and binary relations over them, stored as square 0/1
 * incidence matrices with one bit vector per row. Both types are immutable
 * after construction; all operations build new values.
 */

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relmat/bitvec.hpp"
#include "relmat/errors.hpp"

namespace relmat {

/// Ordered set of distinct element labels. Position i and label biject;
/// the order is fixed at construction.
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      validate_label(labels_[i]);
      if (!pos_.emplace(labels_[i], i).second)
        throw DuplicateElement("duplicate element label '" + labels_[i] + "'");
    }
  }

  /// The default carrier {"1", ..., "n"}.
  static IndexSet numbered(std::size_t n) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
    return IndexSet(std::move(ls));
  }

  std::size_t size() const { return labels_.size(); }

  const std::string& label(std::size_t i) const {
    if (i >= labels_.size()) throw IndexOutOfRange("index " + std::to_string(i) + " out of range");
    return labels_[i];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = pos_.find(std::string(label));
    if (it == pos_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t position(std::string_view label) const {
    if (auto p = find(label)) return *p;
    throw UnknownLabel("unknown element label '" + std::string(label) + "'");
  }

  /// True when the labels are exactly the default "1".."n".
  bool is_numbered() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] != std::to_string(i + 1)) return false;
    return true;
  }

  bool operator==(const IndexSet& o) const { return labels_ == o.labels_; }

private:
  static void validate_label(const std::string& s) {
    if (s.empty()) throw InvalidLabel("empty element label");
    for (unsigned char c : s)
      if (std::isspace(c)) throw InvalidLabel("element label '" + s + "' contains whitespace");
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> pos_;
};

/// A subset of an index set, as a bit vector over parent positions.
class IndexSubset {
public:
  IndexSubset(IndexSet parent, BitVec members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    if (members_.size() != parent_.size())
      throw IndexSetMismatch("subset bit width does not match its parent set");
  }

  const IndexSet& parent() const { return parent_; }
  const BitVec& members() const { return members_; }

  bool contains(std::string_view label) const { return members_.test(parent_.position(label)); }

  std::vector<std::string> labels() const {
    std::vector<std::string> ls;
    for (std::size_t i : members_.positions()) ls.push_back(parent_.label(i));
    return ls;
  }

  bool operator==(const IndexSubset& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

private:
  IndexSet parent_;
  BitVec members_;
};

/// Binary relation on an index set: a square 0/1 incidence matrix with
/// bit (i,j) set iff (label_i, label_j) is in the relation.
class Relation {
public:
  Relation() = default;

  static Relation empty(IndexSet ix) {
    std::size_t n = ix.size();
    return Relation(std::move(ix), std::vector<BitVec>(n, BitVec(n)));
  }

  static Relation identity(IndexSet ix) {
    Relation r = empty(std::move(ix));
    for (std::size_t i = 0; i < r.size(); ++i) r.rows_[i].set(i);
    return r;
  }

  static Relation full(IndexSet ix) {
    Relation r = empty(std::move(ix));
    for (auto& row : r.rows_) row = row.complement();
    return r;
  }

  static Relation from_rows(IndexSet ix, std::vector<BitVec> rows) {
    if (rows.size() != ix.size()) throw NonSquare("row count does not match index set size");
    for (const BitVec& row : rows)
      if (row.size() != ix.size()) throw NonSquare("row width does not match index set size");
    return Relation(std::move(ix), std::move(rows));
  }

  /// Builds the relation listed as pairs of labels. Duplicate pairs collapse.
  static Relation from_pairs(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
    Relation r = empty(IndexSet(elements));
    for (const auto& [a, b] : pairs) r.rows_[r.index_.position(a)].set(r.index_.position(b));
    return r;
  }

  /// Builds the relation from an explicit 0/1 grid. Labels default to "1".."n".
  static Relation from_matrix(const std::vector<std::vector<int>>& grid,
                              std::optional<std::vector<std::string>> elements = std::nullopt) {
    const std::size_t n = grid.size();
    IndexSet ix = elements ? IndexSet(std::move(*elements)) : IndexSet::numbered(n);
    if (ix.size() != n) throw NonSquare("element count does not match row count");
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (grid[i].size() != n) throw NonSquare("row " + std::to_string(i + 1) + " has " +
                                               std::to_string(grid[i].size()) + " entries, expected " +
                                               std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        if (grid[i][j] != 0 && grid[i][j] != 1)
          throw NonBinaryEntry("entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") is not 0 or 1");
        if (grid[i][j]) rows[i].set(j);
      }
    }
    return Relation(std::move(ix), std::move(rows));
  }

  std::size_t size() const { return index_.size(); }
  const IndexSet& index_set() const { return index_; }

  const BitVec& row(std::size_t i) const {
    if (i >= rows_.size()) throw IndexOutOfRange("row " + std::to_string(i) + " out of range");
    return rows_[i];
  }

  bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }

  bool contains(std::string_view a, std::string_view b) const {
    return rows_[index_.position(a)].test(index_.position(b));
  }

  /// Column j gathered on demand; rows are the stored layout.
  BitVec column(std::size_t j) const {
    BitVec col(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (rows_[i].test(j)) col.set(i);
    return col;
  }

  Relation converse() const {
    std::size_t n = size();
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = rows_[i].find_first(); j != BitVec::npos; j = rows_[i].find_next(j))
        rows[j].set(i);
    return Relation(index_, std::move(rows));
  }

  /// The set of successors of position i (the support of row i).
  IndexSubset row_set(std::size_t i) const { return IndexSubset(index_, row(i)); }

  /// All member pairs as labels, ordered by (row position, column position).
  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> ps;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j : rows_[i].positions()) ps.emplace_back(index_.label(i), index_.label(j));
    return ps;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const BitVec& row : rows_) c += row.count();
    return c;
  }

  bool operator==(const Relation& o) const { return index_ == o.index_ && rows_ == o.rows_; }

  bool operator<(const Relation& o) const {
    if (index_.labels() != o.index_.labels()) return index_.labels() < o.index_.labels();
    return rows_ < o.rows_;
  }

private:
  Relation(IndexSet ix, std::vector<BitVec> rows) : index_(std::move(ix)), rows_(std::move(rows)) {}

  IndexSet index_;
  std::vector<BitVec> rows_;
};

inline void require_same_index(const Relation& r, const Relation& s) {
  if (!(r.index_set() == s.index_set()))
    throw IndexSetMismatch("relations are over different index sets");
}

}  // namespace relmat

#pragma once

/**
 * The unitary-semiring operations on incidence matrices. Union is the
 * entrywise maximum; composition is the matrix product with addition replaced
 * by maximum, which over 0/1 entries is an OR of ANDs. Relation::empty and
 * Relation::identity are the two constants.
 *
 * Composition direction: (i,j) is in compose(r, s) iff there is an m with
 * (i,m) in r and (m,j) in s.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relmat/errors.hpp"
#include "relmat/relation.hpp"

namespace relmat {

/// Max-product composition. Row i of the result is the OR of the rows of `s`
/// selected by the set bits of row i of `r`; entrywise this equals
/// max_k r[i][k] * s[k][j].
inline Relation compose(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  std::vector<BitVec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec acc(n);
    const BitVec& picks = r.row(i);
    for (std::size_t k = picks.find_first(); k != BitVec::npos; k = picks.find_next(k))
      acc |= s.row(k);
    rows.push_back(std::move(acc));
  }
  return Relation::from_rows(r.index_set(), std::move(rows));
}

/// Relation union: entrywise maximum.
inline Relation unite(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  std::vector<BitVec> rows;
  rows.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) rows.push_back(r.row(i) | s.row(i));
  return Relation::from_rows(r.index_set(), std::move(rows));
}

/// Index set of a product of carriers: all label tuples in lexicographic
/// (row-major) order, first factor most significant.
class ProductIndexSet {
public:
  explicit ProductIndexSet(std::vector<IndexSet> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw EmptyFactorList("product of zero factors");
    size_ = 1;
    for (const IndexSet& f : factors_) size_ *= f.size();
  }

  const std::vector<IndexSet>& factors() const { return factors_; }
  std::size_t size() const { return size_; }

  /// Component positions of the tuple at `pos`, most-significant factor first.
  std::vector<std::size_t> decode(std::size_t pos) const {
    std::vector<std::size_t> tuple(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
      const std::size_t fk = factors_[k].size();
      tuple[k] = pos % fk;
      pos /= fk;
    }
    return tuple;
  }

  std::size_t encode(std::span<const std::size_t> tuple) const {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) pos = pos * factors_[k].size() + tuple[k];
    return pos;
  }

  /// The product carrier as a plain index set with tuple labels `(a,b)`.
  /// A component that is itself a tuple melts into the outer tuple, so
  /// nested products flatten left-first.
  IndexSet flat() const {
    std::vector<std::string> labels;
    labels.reserve(size_);
    for (std::size_t p = 0; p < size_; ++p) {
      std::string l = "(";
      auto tuple = decode(p);
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k) l += ',';
        const std::string& c = factors_[k].label(tuple[k]);
        if (c.size() >= 2 && c.front() == '(' && c.back() == ')')
          l += c.substr(1, c.size() - 2);
        else
          l += c;
      }
      l += ')';
      labels.push_back(std::move(l));
    }
    return IndexSet(std::move(labels));
  }

private:
  std::vector<IndexSet> factors_;
  std::size_t size_;
};

/// Cartesian product of relations: a tuple pair is a member iff every factor
/// contains its component pair (the entrywise minimum over factors).
inline Relation cartesian_product(std::span<const Relation> factors) {
  if (factors.empty()) throw EmptyFactorList("product of zero factors");
  std::vector<IndexSet> carriers;
  carriers.reserve(factors.size());
  for (const Relation& f : factors) carriers.push_back(f.index_set());
  const ProductIndexSet product(std::move(carriers));
  const std::size_t n = product.size();

  std::vector<BitVec> rows(n, BitVec(n));
  for (std::size_t u = 0; u < n; ++u) {
    const auto ut = product.decode(u);
    for (std::size_t v = 0; v < n; ++v) {
      const auto vt = product.decode(v);
      bool member = true;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (!factors[k].test(ut[k], vt[k])) {
          member = false;
          break;
        }
      }
      if (member) rows[u].set(v);
    }
  }
  return Relation::from_rows(product.flat(), std::move(rows));
}

inline Relation cartesian_product(std::initializer_list<Relation> factors) {
  return cartesian_product(std::span<const Relation>(factors.begin(), factors.size()));
}

/// Binary convenience wrapper over the n-ary product.
inline Relation cartesian_product(const Relation& a, const Relation& b) {
  return cartesian_product({a, b});
}

}  // namespace relmat

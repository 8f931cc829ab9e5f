#pragma once

/**
 * Brute-force reference implementations used as ground truth in tests.
 * Nothing here shares a code path with the word-parallel composition kernel:
 * everything works entry by entry from the defining quantifiers.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relmat/errors.hpp"
#include "relmat/relation.hpp"

namespace relmat::oracle {

/// Triple-loop composition: (i,j) is a member iff some m has (i,m) in r and
/// (m,j) in s.
inline Relation naive_compose(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  std::vector<BitVec> rows(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        if (r.test(i, m) && s.test(m, j)) {
          rows[i].set(j);
          break;
        }
  return Relation::from_rows(r.index_set(), std::move(rows));
}

namespace detail {

inline Relation relation_from_mask(const IndexSet& ix, std::uint64_t mask) {
  const std::size_t n = ix.size();
  std::vector<BitVec> rows(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1u) rows[i].set(j);
  return Relation::from_rows(ix, std::move(rows));
}

}  // namespace detail

/// Every X with compose(r, X) = s, found by trying all 2^(n*n) candidates and
/// checking each entry against the existential definition. Candidates are
/// visited in increasing row-major mask order, so the result is deterministic.
inline std::vector<Relation> brute_force_solutions(const Relation& r, const Relation& s,
                                                   std::size_t max_dim = 4) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  if (n > max_dim)
    throw TooLarge("brute force over " + std::to_string(n) + " elements exceeds the cap of " +
                   std::to_string(max_dim));
  std::vector<Relation> found;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Relation x = detail::relation_from_mask(r.index_set(), mask);
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        bool reach = false;
        for (std::size_t m = 0; m < n; ++m)
          if (r.test(i, m) && x.test(m, j)) {
            reach = true;
            break;
          }
        if (reach != s.test(i, j)) ok = false;
      }
    }
    if (ok) found.push_back(std::move(x));
  }
  return found;
}

/// Smallest transitive relation containing r, by fixpoint iteration over
/// naive_compose.
inline Relation transitive_closure(const Relation& r) {
  Relation cur = r;
  while (true) {
    const Relation step = naive_compose(cur, cur);
    const std::size_t n = cur.size();
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cur.test(i, j) || step.test(i, j)) rows[i].set(j);
    Relation next = Relation::from_rows(cur.index_set(), std::move(rows));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace relmat::oracle

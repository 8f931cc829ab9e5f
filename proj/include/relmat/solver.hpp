#pragma once

/**
 * Everything about the equation compose(R, X) = S: the solvability test, the
 * full solution family, exact counting, deterministic enumeration, special
 * cases (row-functional R, invertible R, reflexive/transitive shortcut),
 * unsolvability diagnostics, and the mirrored equation compose(X, R) = S.
 *
 * The solution family decomposes per column k of X. Writing A_i for the
 * support of row i of R and looking at column k of S: every position that
 * some zero entry of that column can see through R is forced to 0 (the
 * column's forced_zero set), and every 1 entry at row i demands a set bit
 * inside A_i minus forced_zero (a cover constraint). Any bit pattern on the
 * remaining free cells that hits every constraint is a valid column, and
 * columns are mutually independent.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "relmat/bigcount.hpp"
#include "relmat/bitvec.hpp"
#include "relmat/errors.hpp"
#include "relmat/relation.hpp"
#include "relmat/semiring.hpp"

namespace relmat {

// ---------------------------------------------------------------------------
// Unsolvability witnesses

/// Row `row` of R is empty, yet entry (row, col) of S is 1: nothing is
/// reachable from `row` through R.
struct ZeroRowWitness {
  std::size_t row;
  std::size_t col;
  bool operator==(const ZeroRowWitness&) const = default;
};

/// Rows row_a and row_b of R are identical, yet rows row_a and row_b of S
/// differ at column col; composition cannot tell them apart.
struct EqualRowsWitness {
  std::size_t row_a;
  std::size_t row_b;
  std::size_t col;
  bool operator==(const EqualRowsWitness&) const = default;
};

/// Row `row` of R is exactly {target}, so any solution X must set
/// (target, col) to produce entry (row, col) of S; `via` also reaches
/// target, which would force entry (via, col) of S to 1, but it is 0.
struct ForcedConflictWitness {
  std::size_t row;
  std::size_t target;
  std::size_t col;
  std::size_t via;
  bool operator==(const ForcedConflictWitness&) const = default;
};

/// Entry (row, col) of S is 1, but every position of the row-support of
/// `row` is forced to 0 in column col: the entry cannot be covered.
struct UncoverableWitness {
  std::size_t col;
  std::size_t row;
  bool operator==(const UncoverableWitness&) const = default;
};

using UnsolvabilityWitness =
    std::variant<ZeroRowWitness, EqualRowsWitness, ForcedConflictWitness, UncoverableWitness>;

// ---------------------------------------------------------------------------
// The solution space

/// All valid assignments for one column of X. Valid column vectors are
/// exactly the subsets of free_cells that intersect every constraint set.
struct ColumnSpace {
  std::size_t column;               // column position in the index set
  BitVec forced_zero;               // positions pinned to 0
  std::vector<BitVec> constraints;  // deduplicated anti-chain of cover sets, sorted
  BitVec free_cells;                // complement of forced_zero
};

/// Compact description of ALL solutions: one independent ColumnSpace per
/// column. When `transposed` is set the space describes compose(X, R) = S and
/// every derived solution is transposed on the way out.
struct SolutionSpace {
  IndexSet index;
  std::vector<ColumnSpace> columns;
  bool transposed = false;
};

using SolveResult = std::variant<SolutionSpace, UnsolvabilityWitness>;

struct SolverOptions {
  /// Columns with at most this many free cells enumerate by counting through
  /// all candidate patterns and filtering; larger columns use the pruned
  /// search. Both produce the same sequence.
  std::size_t filter_enum_limit = 20;
  /// Counting uses inclusion-exclusion while the constraint anti-chain is at
  /// most this big, and the memoized search beyond.
  std::size_t ie_constraint_limit = 30;
};

namespace detail {

/// Sort, deduplicate, and drop every set that contains another (a hit of the
/// subset hits the superset too). Subset implies numerically smaller, so a
/// single forward pass suffices.
inline void canonicalize_antichain(std::vector<BitVec>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<BitVec> kept;
  for (BitVec& c : sets) {
    bool absorbed = false;
    for (const BitVec& k : kept)
      if (k.subset_of(c)) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(std::move(c));
  }
  sets = std::move(kept);
}

}  // namespace detail

/// Decides solvability of compose(R, X) = S and, when solvable, returns the
/// per-column description of every solution. Columns are scanned in order and
/// the first uncoverable entry is reported otherwise.
inline SolveResult solution_space(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  SolutionSpace space{r.index_set(), {}, false};
  space.columns.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const BitVec scol = s.column(k);
    BitVec forced(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!scol.test(i)) forced |= r.row(i);
    std::vector<BitVec> cons;
    for (std::size_t i = scol.find_first(); i != BitVec::npos; i = scol.find_next(i)) {
      BitVec c = r.row(i);
      c.subtract(forced);
      if (c.none()) return UncoverableWitness{k, i};
      cons.push_back(std::move(c));
    }
    detail::canonicalize_antichain(cons);
    space.columns.push_back({k, forced, std::move(cons), forced.complement()});
  }
  return space;
}

// ---------------------------------------------------------------------------
// Counting

namespace detail {

inline BigCount count_column_ie(const ColumnSpace& col, std::size_t f) {
  BigCount total = 0;
  const auto& cons = col.constraints;
  auto rec = [&](auto&& self, std::size_t idx, const BitVec& uni, int sign) -> void {
    if (idx == cons.size()) {
      if (sign > 0)
        total += pow2(f - uni.count());
      else
        total -= pow2(f - uni.count());
      return;
    }
    self(self, idx + 1, uni, sign);
    BitVec u2 = uni;
    u2 |= cons[idx];
    self(self, idx + 1, u2, -sign);
  };
  rec(rec, 0, BitVec(col.free_cells.size()), 1);
  return total;
}

inline BigCount count_column_dfs(const ColumnSpace& col, std::size_t f) {
  const auto free_pos = col.free_cells.positions();
  const std::size_t m = col.constraints.size();
  std::vector<BitVec> hitmask(f, BitVec(m));
  for (std::size_t t = 0; t < f; ++t)
    for (std::size_t j = 0; j < m; ++j)
      if (col.constraints[j].test(free_pos[t])) hitmask[t].set(j);
  std::vector<BitVec> suffix_reach(f + 1, BitVec(m));
  for (std::size_t t = f; t-- > 0;) {
    suffix_reach[t] = suffix_reach[t + 1];
    suffix_reach[t] |= hitmask[t];
  }
  std::vector<std::unordered_map<BitVec, BigCount>> memo(f + 1);
  auto rec = [&](auto&& self, std::size_t t, const BitVec& unhit) -> BigCount {
    if (unhit.none()) return pow2(f - t);  // remaining cells are all arbitrary
    if (t == f) return 0;
    if (!unhit.subset_of(suffix_reach[t])) return 0;
    auto it = memo[t].find(unhit);
    if (it != memo[t].end()) return it->second;
    BitVec taken = unhit;
    taken.subtract(hitmask[t]);
    BigCount res = self(self, t + 1, unhit) + self(self, t + 1, taken);
    memo[t].emplace(unhit, res);
    return res;
  };
  return rec(rec, 0, BitVec(m).complement());
}

inline BigCount count_column(const ColumnSpace& col, const SolverOptions& opt) {
  const std::size_t f = col.free_cells.count();
  if (col.constraints.empty()) return pow2(f);
  if (col.constraints.size() <= opt.ie_constraint_limit) return count_column_ie(col, f);
  return count_column_dfs(col, f);
}

}  // namespace detail

/// Exact number of solutions the space describes: the product over columns of
/// the number of free-cell subsets hitting every constraint.
inline BigCount count_solutions(const SolutionSpace& space, const SolverOptions& opt = {}) {
  BigCount total = 1;
  for (const ColumnSpace& col : space.columns) total *= detail::count_column(col, opt);
  return total;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Yields the valid assignments of one column in increasing numeric order
/// (the full n-bit vector read as an integer, position 0 least significant).
/// Work happens in compacted free-cell coordinates; order is preserved
/// because compaction keeps positions ascending.
class ColumnEnumerator {
public:
  ColumnEnumerator(const ColumnSpace& col, const SolverOptions& opt, std::size_t full_width)
      : full_width_(full_width), free_pos_(col.free_cells.positions()) {
    const std::size_t f = free_pos_.size();
    const std::size_t m = col.constraints.size();
    use_filter_ = f <= opt.filter_enum_limit;
    std::vector<std::size_t> compact_of(full_width_, BitVec::npos);
    for (std::size_t t = 0; t < f; ++t) compact_of[free_pos_[t]] = t;
    cons_.assign(m, BitVec(f));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t pos : col.constraints[j].positions()) cons_[j].set(compact_of[pos]);
    hitmask_.assign(f, BitVec(m));
    for (std::size_t t = 0; t < f; ++t)
      for (std::size_t j = 0; j < m; ++j)
        if (cons_[j].test(t)) hitmask_[t].set(j);
    low_reach_.assign(f, BitVec(m));
    BitVec acc(m);
    for (std::size_t t = 0; t < f; ++t) {
      low_reach_[t] = acc;
      acc |= hitmask_[t];
    }
    cur_ = BitVec(f);
  }

  /// Smallest valid assignment; false when the column admits none.
  bool first(BitVec& out) { return seek(BitVec(free_pos_.size()), out); }

  /// Successor of the last assignment produced; false when exhausted.
  bool next(BitVec& out) {
    BitVec from = cur_;
    if (!from.increment()) return false;
    return seek(std::move(from), out);
  }

private:
  bool valid(const BitVec& c) const {
    for (const BitVec& con : cons_)
      if (!con.intersects(c)) return false;
    return true;
  }

  bool seek(BitVec from, BitVec& out) {
    const bool found = use_filter_ ? seek_filter(std::move(from)) : seek_dfs(from);
    if (!found) return false;
    out = BitVec(full_width_);
    for (std::size_t t : cur_.positions()) out.set(free_pos_[t]);
    return true;
  }

  bool seek_filter(BitVec c) {
    while (true) {
      if (valid(c)) {
        cur_ = std::move(c);
        return true;
      }
      if (!c.increment()) return false;
    }
  }

  /// Smallest valid value >= from, found by deciding bits from the most
  /// significant down, trying 0 before 1, and pruning branches whose unhit
  /// constraints have no member among the remaining lower positions.
  bool seek_dfs(const BitVec& from) {
    BitVec y(free_pos_.size());
    if (!dfs(from, y, free_pos_.size() - 1, BitVec(cons_.size()).complement(), true)) return false;
    cur_ = std::move(y);
    return true;
  }

  bool dfs(const BitVec& x, BitVec& y, std::size_t t, const BitVec& unhit, bool tight) {
    if (t == BitVec::npos) return unhit.none();
    const int min_b = (tight && x.test(t)) ? 1 : 0;
    for (int b = min_b; b <= 1; ++b) {
      BitVec nu = unhit;
      if (b) nu.subtract(hitmask_[t]);
      if (!nu.subset_of(low_reach_[t])) continue;
      y.assign(t, b != 0);
      if (dfs(x, y, t - 1, nu, tight && b == (x.test(t) ? 1 : 0))) return true;
    }
    return false;
  }

  std::size_t full_width_;
  std::vector<std::size_t> free_pos_;
  std::vector<BitVec> cons_;       // constraints in compact coordinates
  std::vector<BitVec> hitmask_;    // per position: which constraints it hits
  std::vector<BitVec> low_reach_;  // constraints hittable strictly below t
  BitVec cur_;
  bool use_filter_;
};

}  // namespace detail

/// Resumable stream over every solution, each exactly once, in a fixed order:
/// per column, assignments ascend numerically; across columns, odometer order
/// with column 0 ticking fastest. Independent streams over one space are
/// safe; the stream owns its state.
class SolutionStream {
public:
  explicit SolutionStream(SolutionSpace space, SolverOptions opt = {}) : space_(std::move(space)) {
    cols_.reserve(space_.columns.size());
    for (const ColumnSpace& col : space_.columns)
      cols_.emplace_back(col, opt, space_.index.size());
    cur_.assign(space_.columns.size(), BitVec(space_.index.size()));
  }

  std::optional<Relation> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      for (std::size_t k = 0; k < cols_.size(); ++k) {
        if (!cols_[k].first(cur_[k])) {
          done_ = true;
          return std::nullopt;
        }
      }
      started_ = true;
      return build();
    }
    std::size_t k = 0;
    for (; k < cols_.size(); ++k) {
      if (cols_[k].next(cur_[k])) break;
      cols_[k].first(cur_[k]);  // this digit wraps, carry into the next
    }
    if (k == cols_.size()) {
      done_ = true;
      return std::nullopt;
    }
    return build();
  }

private:
  Relation build() const {
    const std::size_t n = space_.index.size();
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t k = 0; k < cols_.size(); ++k)
      for (std::size_t j : cur_[k].positions()) rows[j].set(space_.columns[k].column);
    Relation x = Relation::from_rows(space_.index, std::move(rows));
    return space_.transposed ? x.converse() : x;
  }

  SolutionSpace space_;
  std::vector<detail::ColumnEnumerator> cols_;
  std::vector<BitVec> cur_;
  bool started_ = false;
  bool done_ = false;
};

/// Collects solutions in stream order; limit 0 means all of them.
inline std::vector<Relation> enumerate_solutions(const SolutionSpace& space, std::size_t limit = 0,
                                                 const SolverOptions& opt = {}) {
  std::vector<Relation> out;
  SolutionStream stream(space, opt);
  while (auto x = stream.next()) {
    out.push_back(std::move(*x));
    if (limit && out.size() == limit) break;
  }
  return out;
}

/// The entrywise-maximal solution: every free cell set. It contains every
/// solution the space describes.
inline Relation greatest_solution(const SolutionSpace& space) {
  const std::size_t n = space.index.size();
  std::vector<BitVec> rows(n, BitVec(n));
  for (const ColumnSpace& col : space.columns)
    for (std::size_t j : col.free_cells.positions()) rows[j].set(col.column);
  Relation x = Relation::from_rows(space.index, std::move(rows));
  return space.transposed ? x.converse() : x;
}

/// True iff compose(r, x) = s.
inline bool verify(const Relation& r, const Relation& x, const Relation& s) {
  require_same_index(r, x);
  require_same_index(r, s);
  return compose(r, x) == s;
}

// ---------------------------------------------------------------------------
// Diagnostics

/// Necessary-condition diagnostics by direct scan: one witness per zero row
/// whose S row is nonzero, per pair of equal R rows with differing S rows
/// (first differing column), and per singleton R row with a forced conflict
/// (first conflicting column/via pair). An empty result is NOT a proof of
/// solvability; solution_space is the decision procedure.
inline std::vector<UnsolvabilityWitness> diagnose_unsolvable(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  std::vector<UnsolvabilityWitness> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (!r.row(k).none()) continue;
    const std::size_t p = s.row(k).find_first();
    if (p != BitVec::npos) out.push_back(ZeroRowWitness{k, p});
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (!(r.row(k) == r.row(l))) continue;
      for (std::size_t p = 0; p < n; ++p) {
        if (s.test(k, p) != s.test(l, p)) {
          out.push_back(EqualRowsWitness{k, l, p});
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (r.row(k).count() != 1) continue;
    const std::size_t target = r.row(k).find_first();
    bool emitted = false;
    for (std::size_t col = s.row(k).find_first(); !emitted && col != BitVec::npos;
         col = s.row(k).find_next(col)) {
      for (std::size_t via = 0; via < n; ++via) {
        if (r.test(via, target) && !s.test(via, col)) {
          out.push_back(ForcedConflictWitness{k, target, col, via});
          emitted = true;
          break;
        }
      }
    }
  }
  return out;
}

/// Checks that a witness really holds for (r, s).
inline bool witness_holds(const Relation& r, const Relation& s, const UnsolvabilityWitness& w) {
  const std::size_t n = r.size();
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZeroRowWitness>) {
          return r.row(v.row).none() && s.test(v.row, v.col);
        } else if constexpr (std::is_same_v<T, EqualRowsWitness>) {
          return r.row(v.row_a) == r.row(v.row_b) && v.row_a != v.row_b &&
                 s.test(v.row_a, v.col) != s.test(v.row_b, v.col);
        } else if constexpr (std::is_same_v<T, ForcedConflictWitness>) {
          return r.row(v.row).count() == 1 && r.row(v.row).test(v.target) &&
                 r.test(v.via, v.target) && s.test(v.row, v.col) && !s.test(v.via, v.col);
        } else {
          static_assert(std::is_same_v<T, UncoverableWitness>);
          if (!s.test(v.row, v.col)) return false;
          BitVec forced(n);
          for (std::size_t l = 0; l < n; ++l)
            if (!s.test(l, v.col)) forced |= r.row(l);
          BitVec support = r.row(v.row);
          support.subtract(forced);
          return support.none();
        }
      },
      w);
}

// ---------------------------------------------------------------------------
// Special cases

/// Some row of R does not have exactly one set bit, so R is not the graph of
/// a map.
struct NotFunctional {
  std::size_t row;
  bool operator==(const NotFunctional&) const = default;
};

/// When every row of R has exactly one set bit (R is the graph of a map f),
/// the equation pins row f(i) of X to row i of S and leaves rows outside the
/// image of f fully free. Solvable iff rows of S agree wherever f collides;
/// a collision is reported as an EqualRowsWitness. The returned space is
/// structurally identical to the general one.
inline std::variant<SolutionSpace, UnsolvabilityWitness, NotFunctional> solve_functional(
    const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.row(i).count() != 1) return NotFunctional{i};
    image[i] = r.row(i).find_first();
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      if (image[k] != image[l]) continue;
      for (std::size_t p = 0; p < n; ++p)
        if (s.test(k, p) != s.test(l, p)) return EqualRowsWitness{k, l, p};
    }
  SolutionSpace space{r.index_set(), {}, false};
  space.columns.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    BitVec forced(n);
    std::vector<BitVec> cons;
    for (std::size_t i = 0; i < n; ++i)
      if (!s.test(i, k)) forced.set(image[i]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.test(i, k)) continue;
      BitVec c(n);
      c.set(image[i]);
      cons.push_back(std::move(c));
    }
    detail::canonicalize_antichain(cons);
    space.columns.push_back({k, forced, std::move(cons), forced.complement()});
  }
  return space;
}

/// The max-product inverse exists exactly for permutation matrices (one set
/// bit per row and per column) and is the transpose.
inline std::optional<Relation> invert(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.row(i).count() != 1) return std::nullopt;
    hit[r.row(i).find_first()] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!hit[j]) return std::nullopt;
  return r.converse();
}

/// For invertible R the unique solution is compose(invert(R), S).
inline std::optional<Relation> solve_via_inverse(const Relation& r, const Relation& s) {
  require_same_index(r, s);
  const auto inv = invert(r);
  if (!inv) return std::nullopt;
  return compose(*inv, s);
}

enum class ShortcutFailure { NotSubset, NotReflexive, NotTransitive };

inline const char* to_string(ShortcutFailure f) {
  switch (f) {
    case ShortcutFailure::NotSubset: return "left relation is not a subset of the right-hand side";
    case ShortcutFailure::NotReflexive: return "left relation is not reflexive";
    case ShortcutFailure::NotTransitive: return "right-hand side is not transitive";
  }
  return "?";
}

/// When R is a reflexive subset of a transitive S, the identity joined with
/// (S minus R) solves the equation directly. Preconditions are checked in
/// that order and the first failure is reported.
inline std::variant<Relation, ShortcutFailure> solve_reflexive_transitive(const Relation& r,
                                                                          const Relation& s) {
  require_same_index(r, s);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!r.row(i).subset_of(s.row(i))) return ShortcutFailure::NotSubset;
  for (std::size_t i = 0; i < n; ++i)
    if (!r.test(i, i)) return ShortcutFailure::NotReflexive;
  const Relation ss = compose(s, s);
  for (std::size_t i = 0; i < n; ++i)
    if (!ss.row(i).subset_of(s.row(i))) return ShortcutFailure::NotTransitive;
  std::vector<BitVec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec row = s.row(i);
    row.subtract(r.row(i));
    row.set(i);
    rows.push_back(std::move(row));
  }
  return Relation::from_rows(r.index_set(), std::move(rows));
}

/// Solves compose(X, R) = S: Y solves compose(converse(R), Y) = converse(S)
/// iff converse(Y) solves the original, so the space of the transposed
/// instance is returned with its output flag set. A witness, if any, refers
/// to the transposed instance.
inline SolveResult solve_right(const Relation& r, const Relation& s) {
  SolveResult res = solution_space(r.converse(), s.converse());
  if (auto* space = std::get_if<SolutionSpace>(&res)) space->transposed = true;
  return res;
}

// ---------------------------------------------------------------------------
// Rendering

/// "{a,b}" with members in position order.
inline std::string label_set(const IndexSet& ix, const BitVec& members) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members.positions()) {
    if (!first) out += ',';
    out += ix.label(i);
    first = false;
  }
  out += '}';
  return out;
}

/// Canonical per-column rendering, one line per column:
/// `col k: zero={...} constraints=[{...},...]`.
inline void describe(std::ostream& out, const SolutionSpace& space) {
  for (const ColumnSpace& col : space.columns) {
    out << "col " << space.index.label(col.column) << ": zero="
        << label_set(space.index, col.forced_zero) << " constraints=[";
    for (std::size_t j = 0; j < col.constraints.size(); ++j) {
      if (j) out << ',';
      out << label_set(space.index, col.constraints[j]);
    }
    out << "]\n";
  }
}

inline void describe(std::ostream& out, const UnsolvabilityWitness& w, const IndexSet& ix) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZeroRowWitness>) {
          out << "zero-row k=" << ix.label(v.row) << " p=" << ix.label(v.col);
        } else if constexpr (std::is_same_v<T, EqualRowsWitness>) {
          out << "equal-rows k=" << ix.label(v.row_a) << " l=" << ix.label(v.row_b)
              << " p=" << ix.label(v.col);
        } else if constexpr (std::is_same_v<T, ForcedConflictWitness>) {
          out << "forced-conflict k=" << ix.label(v.row) << " l=" << ix.label(v.target)
              << " m=" << ix.label(v.col) << " n=" << ix.label(v.via);
        } else {
          out << "uncoverable k=" << ix.label(v.col) << " i=" << ix.label(v.row);
        }
      },
      w);
  out << '\n';
}

}  // namespace relmat

// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// fails. Runs standalone (no test framework) so the output stays a plain,
// greppable checklist. Criteria with a runtime budget print their timing.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relmat/cli.hpp"
#include "relmat/relmat.hpp"

using namespace relmat;

namespace {

std::string data(const std::string& name) {
  return (std::filesystem::path(RELMAT_TEST_DIR) / "data" / name).string();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(RELMAT_TEST_DIR) / "golden" / name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Relation from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<BitVec> rows(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1u) rows[i].set(j);
  return Relation::from_rows(IndexSet::numbered(n), std::move(rows));
}

Relation random_relation(std::mt19937& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<BitVec> rows(n, BitVec(n));
  for (auto& row : rows)
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) row.set(j);
  return Relation::from_rows(IndexSet::numbered(n), std::move(rows));
}

std::vector<Relation> sorted(std::vector<Relation> rs) {
  std::sort(rs.begin(), rs.end(), [](const Relation& a, const Relation& b) { return a < b; });
  return rs;
}

struct Cli {
  int status;
  std::string out;
};

Cli run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

int failures = 0;

void criterion(int num, const std::string& name, double budget_ms,
               const std::function<bool()>& body) {
  using clock = std::chrono::steady_clock;
  bool ok = false;
  const auto t0 = clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "FAIL  " << num << " " << name << " (exception: " << e.what() << ")\n";
    ++failures;
    return;
  }
  const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  if (budget_ms > 0 && ms >= budget_ms) ok = false;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << num << " " << name;
  if (budget_ms > 0)
    std::cout << " (" << ms << " ms, budget " << budget_ms << " ms)";
  std::cout << "\n";
  if (!ok) ++failures;
}

bool permutation_shape(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> col_hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.row(i).count() != 1) return false;
    ++col_hits[r.row(i).find_first()];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (col_hits[j] != 1) return false;
  return true;
}

}  // namespace

int main() {
  const std::string enumerate_golden = golden("ex1_enumerate_pairs.txt");
  const std::string explain_golden = golden("ex1_explain.txt");

  criterion(1, "count and enumeration on the 3x3 fixture instance", 10.0, [&] {
    const Cli count = run_cli({"count", data("ex1_r.mat"), data("ex1_s.mat")});
    const Cli enumerated =
        run_cli({"enumerate", data("ex1_r.mat"), data("ex1_s.mat"), "--format", "pairs"});
    return count.status == 0 && count.out == "4\n" && enumerated.status == 0 &&
           enumerated.out == enumerate_golden;
  });

  criterion(2, "explain rendering matches the frozen golden file", 0, [&] {
    const Cli res = run_cli({"solve", "--explain", data("ex1_r.mat"), data("ex1_s.mat")});
    return res.status == 0 && res.out == explain_golden;
  });

  criterion(3, "functional fast path and inverse route agree on the unique solution", 0, [&] {
    const Relation r = io::read_file(data("cycle_r.mat"));
    const Relation s = io::read_file(data("cycle_s.mat"));
    const Relation want = Relation::from_pairs(
        {"1", "2", "3"}, {{"1", "3"}, {"2", "1"}, {"2", "2"}, {"3", "3"}});
    auto res = solve_functional(r, s);
    const auto* space = std::get_if<SolutionSpace>(&res);
    if (!space) return false;
    const auto sols = enumerate_solutions(*space);
    const auto via_inverse = solve_via_inverse(r, s);
    return count_solutions(*space) == 1 && sols.size() == 1 && sols[0] == want &&
           via_inverse.has_value() && *via_inverse == want && verify(r, want, s);
  });

  criterion(4, "cartesian product block placement on the 2x2 and 3x3 fixtures", 0, [&] {
    const Relation t = cartesian_product(io::read_file(data("prod_r.mat")),
                                         io::read_file(data("prod_s.mat")));
    if (t.size() != 6) return false;
    if (t.index_set().labels() !=
        std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)", "(2,3)"})
      return false;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < 6; ++i) ones += t.row(i).count();
    return ones == 4 && t.test(2, 1) && t.test(2, 2) && t.test(5, 1) && t.test(5, 2);
  });

  criterion(5, "semiring laws on 500 random triples", 5000.0, [&] {
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = dim(rng);
      const Relation a = random_relation(rng, n);
      const Relation b = random_relation(rng, n);
      const Relation c = random_relation(rng, n);
      const Relation zero = Relation::empty(a.index_set());
      const Relation one = Relation::identity(a.index_set());
      if (!(unite(a, b) == unite(b, a))) return false;
      if (!(unite(unite(a, b), c) == unite(a, unite(b, c)))) return false;
      if (!(unite(a, zero) == a)) return false;
      if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) return false;
      if (!(compose(a, one) == a && compose(one, a) == a)) return false;
      if (!(compose(a, unite(b, c)) == unite(compose(a, b), compose(a, c)))) return false;
      if (!(compose(unite(a, b), c) == unite(compose(a, c), compose(b, c)))) return false;
      if (!(compose(a, zero) == zero && compose(zero, a) == zero)) return false;
    }
    return true;
  });

  criterion(6, "kernel equals set-definition composition, exhaustive small plus random", 30000.0,
            [&] {
              for (std::uint64_t rm = 0; rm < 16; ++rm)
                for (std::uint64_t sm = 0; sm < 16; ++sm) {
                  const Relation r = from_mask(2, rm);
                  const Relation s = from_mask(2, sm);
                  if (!(compose(r, s) == oracle::naive_compose(r, s))) return false;
                }
              for (std::uint64_t rm = 0; rm < 512; ++rm)
                for (std::uint64_t sm = 0; sm < 512; ++sm) {
                  const Relation r = from_mask(3, rm);
                  const Relation s = from_mask(3, sm);
                  if (!(compose(r, s) == oracle::naive_compose(r, s))) return false;
                }
              std::mt19937 rng(102);
              for (std::size_t n = 3; n <= 6; ++n)
                for (int trial = 0; trial < 1000; ++trial) {
                  const Relation r = random_relation(rng, n);
                  const Relation s = random_relation(rng, n);
                  if (!(compose(r, s) == oracle::naive_compose(r, s))) return false;
                }
              return true;
            });

  criterion(7, "solver completeness against brute force, exhaustive n=2 and random n=3", 300000.0,
            [&] {
              const auto matches = [](const Relation& r, const Relation& s) {
                const auto expected = oracle::brute_force_solutions(r, s);
                SolveResult res = solution_space(r, s);
                if (const auto* space = std::get_if<SolutionSpace>(&res)) {
                  if (expected.empty()) return false;
                  if (count_solutions(*space) != expected.size()) return false;
                  if (!(sorted(enumerate_solutions(*space)) == sorted(expected))) return false;
                  for (const Relation& x : expected)
                    if (!verify(r, x, s)) return false;
                  return true;
                }
                return expected.empty() &&
                       witness_holds(r, s, std::get<UnsolvabilityWitness>(res));
              };
              for (std::uint64_t rm = 0; rm < 16; ++rm)
                for (std::uint64_t sm = 0; sm < 16; ++sm)
                  if (!matches(from_mask(2, rm), from_mask(2, sm))) return false;
              std::mt19937 rng(103);
              std::uniform_int_distribution<std::uint64_t> mask(0, 511);
              for (int trial = 0; trial < 1000; ++trial)
                if (!matches(from_mask(3, mask(rng)), from_mask(3, mask(rng)))) return false;
              return true;
            });

  criterion(8, "permutation inverses and non-invertible rejections", 0, [&] {
    const IndexSet ix = IndexSet::numbered(5);
    const Relation id = Relation::identity(ix);
    std::vector<std::size_t> p{0, 1, 2, 3, 4};
    std::size_t perms = 0;
    do {
      std::vector<BitVec> rows(5, BitVec(5));
      for (std::size_t i = 0; i < 5; ++i) rows[i].set(p[i]);
      const Relation r = Relation::from_rows(ix, std::move(rows));
      const auto inv = invert(r);
      if (!inv) return false;
      if (!(compose(r, *inv) == id && compose(*inv, r) == id)) return false;
      if (!(invert(*inv) == r)) return false;
      ++perms;
    } while (std::next_permutation(p.begin(), p.end()));
    if (perms != 120) return false;

    std::mt19937 rng(104);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    int rejected = 0;
    while (rejected < 500) {
      const Relation r = random_relation(rng, dim(rng));
      if (permutation_shape(r)) continue;
      if (invert(r).has_value()) return false;
      ++rejected;
    }
    return true;
  });

  criterion(9, "reflexive/transitive closed-form solutions verify", 0, [&] {
    std::mt19937 rng(105);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::bernoulli_distribution keep(0.5);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = dim(rng);
      const Relation id = Relation::identity(IndexSet::numbered(n));
      const Relation s = oracle::transitive_closure(unite(random_relation(rng, n, 0.3), id));
      std::vector<BitVec> rows;
      rows.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        BitVec row(n);
        for (std::size_t j : s.row(i).positions())
          if (keep(rng)) row.set(j);
        row.set(i);
        rows.push_back(std::move(row));
      }
      const Relation r = Relation::from_rows(s.index_set(), std::move(rows));
      auto res = solve_reflexive_transitive(r, s);
      const auto* x = std::get_if<Relation>(&res);
      if (!x) return false;
      if (!verify(r, *x, s)) return false;
      // the closed form itself: identity joined with S minus R
      std::vector<BitVec> direct;
      direct.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        BitVec row = s.row(i);
        row.subtract(r.row(i));
        row.set(i);
        direct.push_back(std::move(row));
      }
      if (!(*x == Relation::from_rows(s.index_set(), std::move(direct)))) return false;
    }
    return true;
  });

  criterion(10, "diagnostics construct verified witnesses confirmed by brute force", 0, [&] {
    std::mt19937 rng(106);
    std::uniform_int_distribution<std::uint64_t> mask(0, 511);
    std::uniform_int_distribution<std::size_t> pick(0, 2);

    const auto confirmed = [&](const Relation& r, const Relation& s, auto kind_check) {
      const auto witnesses = diagnose_unsolvable(r, s);
      bool kind_found = false;
      for (const auto& w : witnesses) {
        if (!witness_holds(r, s, w)) return false;
        if (kind_check(w)) kind_found = true;
      }
      return kind_found && oracle::brute_force_solutions(r, s).empty();
    };

    for (int trial = 0; trial < 200; ++trial) {
      // a zero row of R facing a set entry of S
      std::size_t k = pick(rng);
      Relation r = from_mask(3, mask(rng));
      std::vector<BitVec> rows{r.row(0), r.row(1), r.row(2)};
      rows[k] = BitVec(3);
      r = Relation::from_rows(r.index_set(), std::move(rows));
      Relation s = from_mask(3, mask(rng));
      std::vector<BitVec> srows{s.row(0), s.row(1), s.row(2)};
      srows[k].set(pick(rng));
      s = Relation::from_rows(s.index_set(), std::move(srows));
      if (!confirmed(r, s, [](const UnsolvabilityWitness& w) {
            return std::holds_alternative<ZeroRowWitness>(w);
          }))
        return false;
    }

    for (int trial = 0; trial < 200; ++trial) {
      // two equal rows of R facing rows of S that differ
      const std::size_t k = pick(rng);
      std::size_t l = pick(rng);
      while (l == k) l = pick(rng);
      Relation r = from_mask(3, mask(rng));
      std::vector<BitVec> rows{r.row(0), r.row(1), r.row(2)};
      rows[l] = rows[k];
      r = Relation::from_rows(r.index_set(), std::move(rows));
      Relation s = from_mask(3, mask(rng));
      const std::size_t p = pick(rng);
      std::vector<BitVec> srows{s.row(0), s.row(1), s.row(2)};
      srows[k].set(p);
      srows[l].reset(p);
      s = Relation::from_rows(s.index_set(), std::move(srows));
      if (!confirmed(r, s, [](const UnsolvabilityWitness& w) {
            return std::holds_alternative<EqualRowsWitness>(w);
          }))
        return false;
    }

    for (int trial = 0; trial < 200; ++trial) {
      // singleton row k of R pointing at l, with a second arrow into l whose
      // right-hand row misses the forced column
      const std::size_t k = pick(rng);
      const std::size_t l = pick(rng);
      std::size_t n = pick(rng);
      while (n == k) n = pick(rng);
      const std::size_t m = pick(rng);
      Relation r = from_mask(3, mask(rng));
      std::vector<BitVec> rows{r.row(0), r.row(1), r.row(2)};
      rows[k] = BitVec::with_bits(3, {l});
      rows[n].set(l);
      r = Relation::from_rows(r.index_set(), std::move(rows));
      Relation s = from_mask(3, mask(rng));
      std::vector<BitVec> srows{s.row(0), s.row(1), s.row(2)};
      srows[k].set(m);
      srows[n].reset(m);
      s = Relation::from_rows(s.index_set(), std::move(srows));
      if (!confirmed(r, s, [](const UnsolvabilityWitness& w) {
            return std::holds_alternative<ForcedConflictWitness>(w);
          }))
        return false;
    }
    return true;
  });

  criterion(11, "dual equation agrees with converse reduction and direct brute force", 0, [&] {
    std::mt19937 rng(107);
    std::uniform_int_distribution<std::uint64_t> mask(0, 511);
    for (int trial = 0; trial < 500; ++trial) {
      const Relation r = from_mask(3, mask(rng));
      const Relation s = from_mask(3, mask(rng));
      std::vector<Relation> direct;
      for (std::uint64_t xm = 0; xm < 512; ++xm) {
        const Relation x = from_mask(3, xm);
        if (oracle::naive_compose(x, r) == s) direct.push_back(x);
      }
      std::vector<Relation> via_converse =
          oracle::brute_force_solutions(r.converse(), s.converse());
      for (Relation& y : via_converse) y = y.converse();
      if (!(sorted(via_converse) == sorted(direct))) return false;
      SolveResult res = solve_right(r, s);
      if (const auto* space = std::get_if<SolutionSpace>(&res)) {
        if (direct.empty()) return false;
        if (count_solutions(*space) != direct.size()) return false;
        if (!(sorted(enumerate_solutions(*space)) == sorted(direct))) return false;
      } else if (!direct.empty()) {
        return false;
      }
    }
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << (11 - failures) << "/11)\n";
  return failures == 0 ? 0 : 1;
}

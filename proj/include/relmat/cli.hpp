#pragma once

/**
 * Command-line frontend. Verbs read relation files (whitespace-separated 0/1
 * matrix rows, or pair listings in `.pairs` files) and print deterministic
 * text: identical inputs and flags produce identical bytes.
 *
 * Exit codes: 0 on success, 1 for I/O, parse, or usage errors, 2 for negative
 * verdicts (unsolvable, not invertible, verification failure, inapplicable
 * special case, diagnostics that found a witness).
 */

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "relmat/relmat.hpp"

namespace relmat::cli {

namespace detail {

inline void print_relation(std::ostream& out, const Relation& r, const std::string& format) {
  if (format == "pairs")
    io::write_pairs(out, r);
  else
    io::write_matrix(out, r);
}

/// The data the per-column description is derived from: row supports of the
/// left relation and zero sets of the right-hand side's columns.
inline void print_solve_context(std::ostream& out, const Relation& r, const Relation& s) {
  const IndexSet& ix = r.index_set();
  out << "rows:";
  for (std::size_t i = 0; i < r.size(); ++i)
    out << ' ' << ix.label(i) << '=' << label_set(ix, r.row(i));
  out << "\nzero-columns:";
  for (std::size_t k = 0; k < s.size(); ++k)
    out << ' ' << ix.label(k) << '=' << label_set(ix, s.column(k).complement());
  out << '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite binary relations as 0/1 incidence matrices: composition, union, "
               "Cartesian products, and the equation compose(R, X) = S",
               "relmat"};
  app.require_subcommand(1);

  std::string path_a, path_b, path_c;
  std::vector<std::string> product_paths;
  bool explain = false;
  std::size_t limit = 1024;
  std::string format = "mat";
  std::size_t max_dim = 4;

  auto* compose_cmd = app.add_subcommand("compose", "print the composition of R and S");
  compose_cmd->add_option("R", path_a, "left relation file")->required();
  compose_cmd->add_option("S", path_b, "right relation file")->required();

  auto* union_cmd = app.add_subcommand("union", "print the union of R and S");
  union_cmd->add_option("R", path_a, "left relation file")->required();
  union_cmd->add_option("S", path_b, "right relation file")->required();

  auto* product_cmd =
      app.add_subcommand("product", "print the Cartesian product with tuple labels");
  product_cmd->add_option("files", product_paths, "factor relation files, left to right")
      ->expected(-2);

  auto* solve_cmd = app.add_subcommand("solve", "decide solvability of compose(R, X) = S");
  solve_cmd->add_option("R", path_a, "left relation file")->required();
  solve_cmd->add_option("S", path_b, "right-hand side file")->required();
  solve_cmd->add_flag("--explain", explain, "print row supports, zero columns, and the space");

  auto* solve_right_cmd =
      app.add_subcommand("solve-right", "decide solvability of compose(X, R) = S");
  solve_right_cmd->add_option("R", path_a, "right relation file")->required();
  solve_right_cmd->add_option("S", path_b, "right-hand side file")->required();
  solve_right_cmd->add_flag("--explain", explain,
                            "print the space of the transposed instance");

  auto* count_cmd = app.add_subcommand("count", "print the exact number of solutions X");
  count_cmd->add_option("R", path_a, "left relation file")->required();
  count_cmd->add_option("S", path_b, "right-hand side file")->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "print every solution X, blank-line separated");
  enumerate_cmd->add_option("R", path_a, "left relation file")->required();
  enumerate_cmd->add_option("S", path_b, "right-hand side file")->required();
  enumerate_cmd->add_option("--limit", limit, "stop after this many solutions, 0 for all")
      ->capture_default_str();
  enumerate_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"mat", "pairs"}))
      ->capture_default_str();

  auto* greatest_cmd = app.add_subcommand("greatest", "print the entrywise-greatest solution X");
  greatest_cmd->add_option("R", path_a, "left relation file")->required();
  greatest_cmd->add_option("S", path_b, "right-hand side file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check compose(R, X) = S");
  verify_cmd->add_option("R", path_a, "left relation file")->required();
  verify_cmd->add_option("X", path_b, "candidate solution file")->required();
  verify_cmd->add_option("S", path_c, "right-hand side file")->required();

  auto* invert_cmd = app.add_subcommand("invert", "print the inverse of a permutation relation");
  invert_cmd->add_option("R", path_a, "relation file")->required();

  auto* functional_cmd = app.add_subcommand(
      "solve-functional", "solve compose(R, X) = S for R with one successor per element");
  functional_cmd->add_option("R", path_a, "left relation file")->required();
  functional_cmd->add_option("S", path_b, "right-hand side file")->required();
  functional_cmd->add_flag("--explain", explain,
                           "print row supports, zero columns, and the space");

  auto* shortcut_cmd = app.add_subcommand(
      "shortcut", "solve directly when R is a reflexive subset of a transitive S");
  shortcut_cmd->add_option("R", path_a, "left relation file")->required();
  shortcut_cmd->add_option("S", path_b, "right-hand side file")->required();

  auto* diagnose_cmd =
      app.add_subcommand("diagnose", "print unsolvability witnesses found by direct scan");
  diagnose_cmd->add_option("R", path_a, "left relation file")->required();
  diagnose_cmd->add_option("S", path_b, "right-hand side file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference implementations");
  oracle_cmd->require_subcommand(1);
  auto* oracle_solutions_cmd =
      oracle_cmd->add_subcommand("solutions", "every solution X by exhaustive search");
  oracle_solutions_cmd->add_option("R", path_a, "left relation file")->required();
  oracle_solutions_cmd->add_option("S", path_b, "right-hand side file")->required();
  oracle_solutions_cmd->add_option("--max-dim", max_dim, "largest accepted matrix dimension")
      ->capture_default_str();
  oracle_solutions_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"mat", "pairs"}))
      ->capture_default_str();
  auto* oracle_compose_cmd =
      oracle_cmd->add_subcommand("compose", "composition by the set definition");
  oracle_compose_cmd->add_option("R", path_a, "left relation file")->required();
  oracle_compose_cmd->add_option("S", path_b, "right relation file")->required();
  auto* oracle_closure_cmd =
      oracle_cmd->add_subcommand("closure", "transitive closure by fixpoint iteration");
  oracle_closure_cmd->add_option("R", path_a, "relation file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (compose_cmd->parsed()) {
      io::write_matrix(out, compose(io::read_file(path_a), io::read_file(path_b)));
      return 0;
    }
    if (union_cmd->parsed()) {
      io::write_matrix(out, unite(io::read_file(path_a), io::read_file(path_b)));
      return 0;
    }
    if (product_cmd->parsed()) {
      std::vector<Relation> factors;
      factors.reserve(product_paths.size());
      for (const std::string& p : product_paths) factors.push_back(io::read_file(p));
      io::write_matrix(out, cartesian_product(factors));
      return 0;
    }
    if (solve_cmd->parsed()) {
      const Relation r = io::read_file(path_a);
      const Relation s = io::read_file(path_b);
      SolveResult res = solution_space(r, s);
      if (const auto* space = std::get_if<SolutionSpace>(&res)) {
        out << "SOLVABLE\n";
        if (explain) {
          detail::print_solve_context(out, r, s);
          describe(out, *space);
        }
        return 0;
      }
      out << "UNSOLVABLE\n";
      describe(out, std::get<UnsolvabilityWitness>(res), r.index_set());
      return 2;
    }
    if (solve_right_cmd->parsed()) {
      const Relation r = io::read_file(path_a);
      const Relation s = io::read_file(path_b);
      SolveResult res = solve_right(r, s);
      if (const auto* space = std::get_if<SolutionSpace>(&res)) {
        out << "SOLVABLE\n";
        if (explain) {
          detail::print_solve_context(out, r.converse(), s.converse());
          describe(out, *space);
        }
        return 0;
      }
      out << "UNSOLVABLE\n";
      describe(out, std::get<UnsolvabilityWitness>(res), r.index_set());
      return 2;
    }
    if (count_cmd->parsed()) {
      SolveResult res = solution_space(io::read_file(path_a), io::read_file(path_b));
      if (const auto* space = std::get_if<SolutionSpace>(&res)) {
        out << count_solutions(*space) << '\n';
        return 0;
      }
      out << "0\n";
      return 2;
    }
    if (enumerate_cmd->parsed()) {
      SolveResult res = solution_space(io::read_file(path_a), io::read_file(path_b));
      const auto* space = std::get_if<SolutionSpace>(&res);
      if (!space) return 2;
      SolutionStream stream(*space);
      std::size_t produced = 0;
      while (auto x = stream.next()) {
        if (limit && produced == limit) break;
        if (produced) out << '\n';
        detail::print_relation(out, *x, format);
        ++produced;
      }
      return 0;
    }
    if (greatest_cmd->parsed()) {
      const Relation r = io::read_file(path_a);
      SolveResult res = solution_space(r, io::read_file(path_b));
      if (const auto* space = std::get_if<SolutionSpace>(&res)) {
        io::write_matrix(out, greatest_solution(*space));
        return 0;
      }
      out << "UNSOLVABLE\n";
      describe(out, std::get<UnsolvabilityWitness>(res), r.index_set());
      return 2;
    }
    if (verify_cmd->parsed()) {
      const bool ok =
          verify(io::read_file(path_a), io::read_file(path_b), io::read_file(path_c));
      out << (ok ? "OK\n" : "FAIL\n");
      return ok ? 0 : 2;
    }
    if (invert_cmd->parsed()) {
      const auto inv = invert(io::read_file(path_a));
      if (!inv) {
        out << "NOT INVERTIBLE\n";
        return 2;
      }
      io::write_matrix(out, *inv);
      return 0;
    }
    if (functional_cmd->parsed()) {
      const Relation r = io::read_file(path_a);
      const Relation s = io::read_file(path_b);
      auto res = solve_functional(r, s);
      if (const auto* nf = std::get_if<NotFunctional>(&res)) {
        out << "NOT FUNCTIONAL row=" << r.index_set().label(nf->row) << '\n';
        return 2;
      }
      if (const auto* w = std::get_if<UnsolvabilityWitness>(&res)) {
        out << "UNSOLVABLE\n";
        describe(out, *w, r.index_set());
        return 2;
      }
      out << "SOLVABLE\n";
      if (explain) {
        detail::print_solve_context(out, r, s);
        describe(out, std::get<SolutionSpace>(res));
      }
      return 0;
    }
    if (shortcut_cmd->parsed()) {
      auto res = solve_reflexive_transitive(io::read_file(path_a), io::read_file(path_b));
      if (const auto* f = std::get_if<ShortcutFailure>(&res)) {
        out << "NOT APPLICABLE: " << to_string(*f) << '\n';
        return 2;
      }
      io::write_matrix(out, std::get<Relation>(res));
      return 0;
    }
    if (diagnose_cmd->parsed()) {
      const Relation r = io::read_file(path_a);
      const auto witnesses = diagnose_unsolvable(r, io::read_file(path_b));
      for (const UnsolvabilityWitness& w : witnesses) describe(out, w, r.index_set());
      return witnesses.empty() ? 0 : 2;
    }
    if (oracle_solutions_cmd->parsed()) {
      const auto sols =
          oracle::brute_force_solutions(io::read_file(path_a), io::read_file(path_b), max_dim);
      for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) out << '\n';
        detail::print_relation(out, sols[i], format);
      }
      return sols.empty() ? 2 : 0;
    }
    if (oracle_compose_cmd->parsed()) {
      io::write_matrix(out, oracle::naive_compose(io::read_file(path_a), io::read_file(path_b)));
      return 0;
    }
    if (oracle_closure_cmd->parsed()) {
      io::write_matrix(out, oracle::transitive_closure(io::read_file(path_a)));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no verb\n";
  return 1;
}

}  // namespace relmat::cli

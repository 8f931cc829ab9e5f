#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relmat/errors.hpp"
#include "relmat/io.hpp"
#include "test_util.hpp"

using namespace relmat;

namespace {

Relation parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return io::read_matrix(in, "mem");
}

Relation parse_pairs(const std::string& text) {
  std::istringstream in(text);
  return io::read_pairs(in, "mem");
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("matrix input without header gets numbered labels") {
  const Relation r = parse_matrix("0 1\n1 0\n");
  CHECK(r.size() == 2);
  CHECK(r.index_set().is_numbered());
  CHECK(r.test(0, 1));
  CHECK_FALSE(r.test(0, 0));
}

TEST_CASE("matrix input with header uses its labels") {
  const Relation r = parse_matrix("elements: a b\n1 0\n0 1\n");
  CHECK(r.index_set().labels() == std::vector<std::string>{"a", "b"});
  CHECK(r.contains("a", "a"));
}

TEST_CASE("matrix input skips comments and blank lines") {
  const Relation r = parse_matrix("# orientation\n\n0 1\n# middle\n1 0\n\n");
  CHECK(r.pair_count() == 2);
}

TEST_CASE("matrix input reports the offending line") {
  CHECK_THROWS_WITH(parse_matrix("0 1\n1 2\n"), "mem:2: entry '2' is not 0 or 1");
  CHECK_THROWS_WITH(parse_matrix("0 1\n1\n"), "mem:2: expected 2 entries, found 1");
  CHECK_THROWS_WITH(parse_matrix("elements: a b\n0 1\n"),
                    "mem:2: expected 2 matrix rows, found 1");
  CHECK_THROWS_AS(parse_matrix("elements: a a\n0 1\n1 0\n"), ParseError);
}

TEST_CASE("empty matrix input is the zero-element relation") {
  CHECK(parse_matrix("").size() == 0);
  CHECK(parse_matrix("# only a comment\n").size() == 0);
}

TEST_CASE("pairs input requires a header") {
  const Relation r = parse_pairs("elements: 1 2 3\n2 1\n2 2\n");
  CHECK(r.pair_count() == 2);
  CHECK(r.contains("2", "1"));
  CHECK_THROWS_WITH(parse_pairs("2 1\n"), "mem:1: pairs input must start with an 'elements:' header");
  CHECK_THROWS_WITH(parse_pairs("elements: 1 2\n1 2 3\n"),
                    "mem:2: expected a pair 'a b', found 3 tokens");
  CHECK_THROWS_AS(parse_pairs("elements: 1 2\n1 9\n"), ParseError);
}

TEST_CASE("matrix output is canonical") {
  const Relation numbered = Relation::from_matrix({{0, 1}, {1, 0}});
  CHECK(test_util::matrix_text(numbered) == "0 1\n1 0\n");

  const Relation labeled = Relation::from_pairs({"x", "y"}, {{"x", "y"}});
  CHECK(test_util::matrix_text(labeled) == "elements: x y\n0 1\n0 0\n");
}

TEST_CASE("pairs output always carries the header") {
  const Relation r = Relation::from_matrix({{0, 1}, {1, 0}});
  std::ostringstream out;
  io::write_pairs(out, r);
  CHECK(out.str() == "elements: 1 2\n1 2\n2 1\n");
}

TEST_CASE("round trips preserve the relation") {
  const Relation r = Relation::from_pairs({"a", "b", "c"}, {{"a", "c"}, {"c", "c"}});
  std::stringstream mat, prs;
  io::write_matrix(mat, r);
  io::write_pairs(prs, r);
  CHECK(io::read_matrix(mat) == r);
  CHECK(io::read_pairs(prs) == r);
}

TEST_CASE("read_file dispatches on the extension") {
  const auto mat = temp_file("relmat_io_test.mat", "0 1\n0 0\n");
  const auto prs = temp_file("relmat_io_test.pairs", "elements: 1 2\n1 2\n");
  CHECK(io::read_file(mat) == io::read_file(prs));
  std::filesystem::remove(mat);
  std::filesystem::remove(prs);
  CHECK_THROWS_AS(io::read_file("/nonexistent/relmat.mat"), Error);
}

TEST_CASE("write_file round trips through both formats") {
  const Relation r = Relation::from_matrix({{1, 0}, {1, 1}});
  for (const char* name : {"relmat_io_rt.mat", "relmat_io_rt.pairs"}) {
    const auto path = std::filesystem::temp_directory_path() / name;
    io::write_file(path, r);
    CHECK(io::read_file(path) == r);
    std::filesystem::remove(path);
  }
}

TEST_CASE("parse errors name the file") {
  const auto bad = temp_file("relmat_io_bad.mat", "0 1\nx 0\n");
  try {
    io::read_file(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("relmat_io_bad.mat:2:") != std::string::npos);
  }
  std::filesystem::remove(bad);
}

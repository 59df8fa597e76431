#include <doctest.h>

#include <sstream>

#include "brute.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/io.hpp"

using namespace rankforge;

namespace {

std::size_t parse_error_line(const std::string& text, bool module) {
  std::istringstream in(text);
  try {
    if (module) {
      read_module(in);
    } else {
      read_pencil(in);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

const char* kPencil =
    "pencil\n"
    "field 2\n"
    "dims 2 2\n"
    "vars 2\n"
    "matrix 0\n"
    "0 1\n"
    "0 0\n"
    "matrix 1\n"
    "1 0\n"
    "0 0\n"
    "matrix 2\n"
    "0 0\n"
    "0 1\n";

}  // namespace

TEST_CASE("pencil round trip") {
  std::istringstream in(kPencil);
  const Pencil p = read_pencil(in);
  CHECK(p.num_vars() == 2);
  CHECK(p.coefficient(0)(0, 1) == 1);
  std::ostringstream out;
  write_pencil(out, p);
  CHECK(out.str() == kPencil);

  rftest::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const FieldModulus mod(t % 2 ? 7 : 2147483647u);
    const Pencil q = rftest::random_rank_one_pencil(mod, 1 + t % 3, 1 + t % 4, t % 3, rng);
    std::ostringstream s;
    write_pencil(s, q);
    std::istringstream back(s.str());
    CHECK(read_pencil(back) == q);
  }
}

TEST_CASE("module round trip") {
  rftest::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const SModule m = rftest::random_module(FieldModulus(5), t % 4, t % 3, rng);
    std::ostringstream s;
    write_module(s, m);
    std::istringstream back(s.str());
    CHECK(read_module(back) == m);
  }
}

TEST_CASE("comments, blank lines and reduction warnings") {
  std::istringstream in(
      "# a module\n"
      "module\n"
      "\n"
      "field 5   # prime\n"
      "dim 2\n"
      "gens 1\n"
      "matrix 1\n"
      "7 -1\n"
      "0 4\n");
  std::vector<std::string> warnings;
  const SModule m = read_module(in, &warnings);
  CHECK(m.actions()[0] == Matrix::from_rows(FieldModulus(5), {{2, 4}, {0, 4}}));
  CHECK(warnings.size() == 2);
  CHECK(warnings[0].find("line 8") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("pencil\nfield 2\ndims 2\n", false) == 3);
  CHECK(parse_error_line("matrix\n", false) == 1);
  CHECK(parse_error_line("pencil\nfield 4\n", false) == 2);
  CHECK(parse_error_line("pencil\nfield 2\ndims 1 1\nvars 0\nmatrix 0\n1 1\n", false) == 6);
  CHECK(parse_error_line("pencil\nfield 2\ndims 1 1\nvars 0\nmatrix 1\n1\n", false) == 5);
  CHECK(parse_error_line("pencil\nfield 2\ndims 1 1\nvars 1\nmatrix 0\n1\n", false) == 7);
  CHECK(parse_error_line("pencil\nfield 2\ndims 1 1\nvars 0\nmatrix 0\n1\nextra\n", false) == 7);
  CHECK(parse_error_line("module\nfield 3\ndim 1\ngens 1\nmatrix 1\nx\n", true) == 6);
  CHECK(parse_error_line("module\nfield 3\ndim -1\n", true) == 3);
}

TEST_CASE("vectors") {
  const FieldModulus p5(5);
  CHECK(parse_vector("1,0,7", p5) == Vector{1, 0, 2});
  CHECK(parse_vector("", p5).empty());
  CHECK(parse_vector("-1", p5) == Vector{4});
  CHECK_THROWS_AS(parse_vector("1,,2", p5), ParseError);
  CHECK_THROWS_AS(parse_vector("a", p5), ParseError);
  CHECK(format_vector(Vector{1, 2, 3}) == "1,2,3");
  CHECK(format_vector(Vector{}).empty());
}

TEST_CASE("missing files") { CHECK_THROWS_AS(load_pencil("/nonexistent/file"), ParseError); }

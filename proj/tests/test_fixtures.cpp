#include <doctest.h>

#include <fstream>
#include <sstream>

#include "jring/fixtures.hpp"
#include "jring/ringlab.hpp"
#include "jring/util.hpp"

using namespace jring;

namespace {

std::string data_path(const char* name) {
  return std::string(JRING_DATA_DIR) + "/" + name;
}

// minimal well-formed fixture for error-path surgery
std::string tiny_fixture(const std::string& patch = "") {
  std::string base =
      "cell T\n"
      "group H4\n"
      "order a b c d\n"
      "coxeter a b 3\ncoxeter b c 3\ncoxeter c d 5\n"
      "n 2\n"
      "identity 1\n"
      "element 1 abcaba\n"
      "element 2 abcdabcaba\n"
      "matrix 2\n"
      "0 1\n"
      "1 0\n"
      "charpoly 1 (-1+u)^{2}\n"
      "charpoly 2 (-1+u)(1+u)\n"
      "subrings {1}\n"
      "subrings ALL\n"
      "derived-dim 0\n"
      "center-dim 2\n";
  return base + patch;
}

}  // namespace

TEST_CASE("shipped A1 fixture parses with the expected shape") {
  CellFixture f = parse_fixture_file(data_path("A1.cell"));
  CHECK(f.name == "A1");
  CHECK(f.n == 14);
  CHECK(f.identity == 1);
  CHECK(f.words.size() == 14);
  CHECK(f.words[0] == "abcaba");
  CHECK(f.explicit_matrices.size() == 3);
  CHECK(f.explicit_matrices.count(2) == 1);
  CHECK(f.explicit_matrices.count(4) == 1);
  CHECK(f.explicit_matrices.count(6) == 1);
  CHECK(f.relations.size() == 10);
  CHECK(f.charpolys.size() == 14);
  CHECK(f.subring_sets.size() == 3);
  CHECK(f.derived_dim == 3);
  CHECK(f.center_dim == 11);
  // every fixture word has even length
  for (const auto& w : f.words) CHECK(w.size() % 2 == 0);
}

TEST_CASE("shipped A9 and A19 fixtures parse") {
  CellFixture a9 = parse_fixture_file(data_path("A9.cell"));
  CHECK(a9.n == 18);
  CHECK(a9.identity == 1);
  CHECK(a9.relations.size() == 14);
  CHECK(a9.subring_sets.size() == 4);
  CellFixture a19 = parse_fixture_file(data_path("A19.cell"));
  CHECK(a19.n == 24);
  CHECK(a19.identity == 2);  // the A19 unit is x_2
  CHECK(a19.relations.size() == 20);
  CHECK(a19.subring_sets.size() == 6);
}

TEST_CASE("fixture parse errors") {
  // missing definition for index 2
  std::string missing =
      "cell T\ngroup H4\norder a b c d\ncoxeter a b 3\ncoxeter b c 3\n"
      "coxeter c d 5\nn 2\nidentity 1\nelement 1 ab\nelement 2 ba\n"
      "charpoly 1 u\ncharpoly 2 u\nsubrings ALL\nderived-dim 0\ncenter-dim 2\n";
  std::istringstream in(missing);
  CHECK_THROWS_WITH_AS(parse_fixture(in), "index 2 has no definition", ParseError);

  // unknown generator letter in a word
  std::string bad = tiny_fixture();
  bad.replace(bad.find("element 2 abcdabcaba"), 20, "element 2 abcdabcabe");
  std::istringstream bad_word(bad);
  CHECK_THROWS_WITH_AS(parse_fixture(bad_word),
                       "unknown generator 'e' in element word at line 10",
                       ParseError);

  // duplicate definition
  std::istringstream dup(tiny_fixture("relation M2 = I\n"));
  CHECK_THROWS_AS(parse_fixture(dup), ParseError);

  // dimension mismatch in a matrix row
  std::string short_row = tiny_fixture();
  auto pos = short_row.find("0 1\n");
  short_row.replace(pos, 4, "0\n");
  std::istringstream bad_row(short_row);
  CHECK_THROWS_AS(parse_fixture(bad_row), ParseError);
}

TEST_CASE("tiny fixture reconstructs and validates") {
  std::istringstream in(tiny_fixture());
  CellFixture f = parse_fixture(in);
  auto ms = reconstruct_matrices(f);
  CHECK(ms[0] == IntMatrix::identity(2));
  GammaTensor t = tensor_from_matrices(f, ms);
  CHECK(t.identity == 0);
  CHECK(t.at(1, 1, 0) == 1);
}

TEST_CASE("A1 matrices reconstruct against the relation list") {
  CellFixture f = parse_fixture_file(data_path("A1.cell"));
  auto ms = reconstruct_matrices(f);
  REQUIRE(ms.size() == 14);
  CHECK(ms[0] == IntMatrix::identity(14));
  // M3 = -I + M2^2
  const IntMatrix& m2 = f.explicit_matrices.at(2);
  CHECK(ms[2] == m2 * m2 - IntMatrix::identity(14));
  // row 2 of M2: t_{x2} t_{x2} = t_{x1} + t_{x3}
  CHECK(ms[1].at(1, 0) == 1);
  CHECK(ms[1].at(1, 2) == 1);
  CHECK(ms[1].at(1, 1) == 0);
  // gamma_{x4,x4,x4^{-1}} = 4
  CHECK(ms[3].at(3, 3) == 4);

  GammaTensor t = tensor_from_matrices(f, ms);
  CHECK(t.at(1, 1, 0) == 1);  // G[2][2][1] in 1-based labels
  // left_mult_matrix recovers the matrix sequence
  for (int j = 0; j < t.n; ++j) CHECK(left_mult_matrix(t, j) == ms[j]);
  // relation referencing an undefined matrix errors
  CellFixture broken = f;
  broken.relations.emplace_back(0, "M0 = M3 M2");  // M3 is not explicit
  CHECK_THROWS_AS(reconstruct_matrices(broken), InvariantError);
}

TEST_CASE("full verification of the shipped A1 fixture") {
  CellFixture f = parse_fixture_file(data_path("A1.cell"));
  VerifyReport rep = verify_fixture(f, nullptr);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("verification reports failures instead of swallowing them") {
  CellFixture f = parse_fixture_file(data_path("A1.cell"));
  // corrupt one table row: verification must flag exactly the charpoly
  // stage and keep running the remaining checks
  f.charpolys[4] = "(-1+u)^{14}";
  VerifyReport rep = verify_fixture(f, nullptr);
  CHECK_FALSE(rep.all_pass());
  int failed = 0;
  for (const auto& c : rep.checks) {
    if (c.name == "charpoly-table") {
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("M5") != std::string::npos);
      ++failed;
    } else {
      CHECK(c.pass);
    }
  }
  CHECK(failed == 1);

  // corrupt a matrix entry: the tensor invariants catch the transcription
  CellFixture g = parse_fixture_file(data_path("A1.cell"));
  g.explicit_matrices.at(2).at(0, 1) = 2;
  VerifyReport rep2 = verify_fixture(g, nullptr);
  CHECK_FALSE(rep2.all_pass());
  bool tensor_flagged = false;
  for (const auto& c : rep2.checks)
    if (c.name == "tensor-invariants" && !c.pass) tensor_flagged = true;
  CHECK(tensor_flagged);
}

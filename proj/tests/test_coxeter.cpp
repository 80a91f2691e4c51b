#include <doctest.h>

#include <algorithm>
#include <set>

#include "jring/coxeter.hpp"
#include "jring/util.hpp"
#include "test_util.hpp"

using namespace jring;
using jring::testing::make_rng;

TEST_CASE("dihedral groups") {
  CoxeterGroup g = build_builtin_group("I2_5");
  CHECK(g.size() == 10);
  CHECK(g.max_length() == 5);
  CHECK(g.length(g.longest()) == 5);
  CHECK(g.identity() == 0);
  for (ElementIndex w = 0; w < g.size(); ++w) {
    CHECK(g.length(g.inverse(w)) == g.length(w));
    CHECK(g.inverse(g.inverse(w)) == w);
  }
}

TEST_CASE("built-in orders match the order formulas") {
  for (const char* type : {"A1", "A2", "A3", "A4", "B3", "H3", "I2_3", "I2_7", "I2_12"}) {
    CoxeterGroup g = build_builtin_group(type);
    CHECK(g.size() == builtin_order(type));
  }
}

TEST_CASE("H4 construction") {
  CoxeterGroup g = build_builtin_group("H4");
  CHECK(g.size() == 14400);
  CHECK(g.max_length() == 60);
  // x1 of the big-cell basis
  ElementIndex x1 = g.parse_word("abcaba");
  CHECK(g.length(x1) == 6);
  CHECK(g.inverse(x1) == x1);
}

TEST_CASE("H3 is the parabolic sub-presentation of H4") {
  CoxeterGroup g = build_builtin_group("H3");
  CHECK(g.size() == 120);
  CHECK(g.max_length() == 15);
}

TEST_CASE("word parsing") {
  CoxeterGroup g = build_builtin_group("H4");
  CHECK(g.parse_word("") == g.identity());
  CHECK(g.parse_word("aa") == g.identity());
  CHECK(g.parse_word("ab") == g.multiply(g.parse_word("a"), g.parse_word("b")));
  try {
    g.parse_word("abcxe");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("multiplication and element wrappers") {
  CoxeterGroup g = build_builtin_group("A3");
  auto rng = make_rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ElementIndex x = ElementIndex(rng() % g.size());
    ElementIndex y = ElementIndex(rng() % g.size());
    CHECK(g.multiply(g.identity(), x) == x);
    CHECK(g.multiply(x, g.identity()) == x);
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    // (xy)^{-1} = y^{-1} x^{-1}
    CHECK(g.inverse(g.multiply(x, y)) ==
          g.multiply(g.inverse(y), g.inverse(x)));
  }
  CoxeterGroup h = build_builtin_group("A2");
  Element a{&g, 1}, b{&h, 1};
  CHECK_THROWS_AS(multiply(a, b), InvariantError);
  Element c = multiply(a, inverse(a));
  CHECK(c.index == g.identity());
}

TEST_CASE("length and descent structure") {
  for (const char* type : {"A3", "B3", "I2_6"}) {
    CoxeterGroup g = build_builtin_group(type);
    GenSet full = (GenSet(1) << g.rank()) - 1;
    for (ElementIndex w = 0; w < g.size(); ++w) {
      // only e has empty left descent set; only w0 has the full one
      CHECK((g.left_descents(w) == 0) == (w == g.identity()));
      CHECK((g.left_descents(w) == full) == (w == g.longest()));
      // descent sets of the inverse are swapped
      CHECK(g.left_descents(g.inverse(w)) == g.right_descents(w));
      for (int s = 0; s < g.rank(); ++s) {
        int diff = g.length(g.right(w, s)) - g.length(w);
        CHECK((diff == 1 || diff == -1));
      }
    }
  }
}

TEST_CASE("Poincare polynomial is palindromic") {
  for (const char* type : {"A3", "B3", "H3", "I2_7"}) {
    CoxeterGroup g = build_builtin_group(type);
    auto h = g.length_histogram();
    for (std::size_t k = 0; k < h.size(); ++k)
      CHECK(h[k] == h[h.size() - 1 - k]);
    CHECK(h[0] == 1);
    CHECK(h[1] == std::size_t(g.rank()));
  }
}

TEST_CASE("ShortLex indexing is deterministic and length-sorted") {
  CoxeterGroup g = build_builtin_group("B3");
  for (ElementIndex w = 1; w < g.size(); ++w) {
    CHECK(g.length(w - 1) <= g.length(w));
    if (g.length(w - 1) == g.length(w))
      CHECK(g.word_string(w - 1) < g.word_string(w));
  }
  // normal forms reproduce the elements
  for (ElementIndex w = 0; w < g.size(); ++w)
    CHECK(g.element_from_word(g.word(w)) == w);
}

namespace {

// subword-property oracle: x <= w iff some subword of a fixed reduced word
// of w multiplies to x
std::set<ElementIndex> bruhat_downset_oracle(const CoxeterGroup& g, ElementIndex w) {
  std::vector<int> word = g.word(w);
  std::set<ElementIndex> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < word.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(word[i]);
    out.insert(g.element_from_word(sub));
  }
  return out;
}

}  // namespace

TEST_CASE("bruhat order examples in I2_3") {
  CoxeterGroup g = build_builtin_group("I2_3");
  ElementIndex st = g.parse_word("st"), ts = g.parse_word("ts"),
               sts = g.parse_word("sts");
  CHECK(g.bruhat_leq(st, sts));
  CHECK_FALSE(g.bruhat_leq(st, ts));
  for (ElementIndex w = 0; w < g.size(); ++w) {
    CHECK(g.bruhat_leq(g.identity(), w));
    CHECK(g.bruhat_leq(w, g.longest()));
  }
}

TEST_CASE("bruhat order matches the subword oracle") {
  for (const char* type : {"I2_3", "I2_4", "I2_5", "I2_6", "A3", "B3"}) {
    CoxeterGroup g = build_builtin_group(type);
    for (ElementIndex w = 0; w < g.size(); ++w) {
      auto oracle = bruhat_downset_oracle(g, w);
      auto mine = g.bruhat_downset(w);
      CHECK(std::set<ElementIndex>(mine.begin(), mine.end()) == oracle);
    }
  }
}

TEST_CASE("bruhat anti-automorphism by w0") {
  for (const char* type : {"A3", "B3", "I2_5"}) {
    CoxeterGroup g = build_builtin_group(type);
    ElementIndex w0 = g.longest();
    for (ElementIndex x = 0; x < g.size(); ++x)
      for (ElementIndex w = 0; w < g.size(); ++w)
        CHECK(g.bruhat_leq(x, w) ==
              g.bruhat_leq(g.multiply(w0, w), g.multiply(w0, x)));
  }
}

TEST_CASE("dihedral and reflection builders agree") {
  for (const char* type : {"I2_2", "I2_3", "I2_4", "I2_5", "I2_6", "I2_10"}) {
    CoxeterDescriptor d = CoxeterDescriptor::builtin(type);
    CoxeterGroup a = CoxeterGroup::build(d);
    BuildOptions opt;
    opt.force_reflection = true;
    CoxeterGroup b = CoxeterGroup::build(d, opt);
    REQUIRE(a.size() == b.size());
    for (ElementIndex w = 0; w < a.size(); ++w) {
      CHECK(a.length(w) == b.length(w));
      CHECK(a.inverse(w) == b.inverse(w));
      for (int s = 0; s < a.rank(); ++s) {
        CHECK(a.left(s, w) == b.left(s, w));
        CHECK(a.right(w, s) == b.right(w, s));
      }
    }
  }
}

TEST_CASE("descriptor text round trip") {
  std::string text = "rank 4\norder a b c d\ncoxeter a b 3\ncoxeter b c 3\ncoxeter c d 5\n";
  CoxeterDescriptor d = CoxeterDescriptor::from_text(text);
  CHECK(d.canonical_text() == CoxeterDescriptor::builtin("H4").canonical_text());
  CHECK(d.stable_hash() == CoxeterDescriptor::builtin("H4").stable_hash());
  CHECK_THROWS_AS(CoxeterDescriptor::from_text("order a b\ncoxeter a z 3\n"), ParseError);
  CHECK_THROWS_AS(CoxeterDescriptor::from_text("rank 3\norder a b\n"), ParseError);
}

TEST_CASE("element ceiling guards non-finite input") {
  CoxeterDescriptor d = CoxeterDescriptor::builtin("I2_40");
  BuildOptions opt;
  opt.max_elements = 50;
  CHECK_THROWS_AS(CoxeterGroup::build(d, opt), InvariantError);
  // affine G2-like diagram: tree shaped but infinite
  CoxeterDescriptor aff = CoxeterDescriptor::from_text(
      "order a b c\ncoxeter a b 6\ncoxeter b c 3\n");
  BuildOptions opt2;
  opt2.max_elements = 3000;
  CHECK_THROWS_AS(CoxeterGroup::build(aff, opt2), InvariantError);
  // cyclic diagrams are rejected outright
  CoxeterDescriptor cyc = CoxeterDescriptor::from_text(
      "order a b c\ncoxeter a b 3\ncoxeter b c 3\ncoxeter a c 3\n");
  CHECK_THROWS_AS(CoxeterGroup::build(cyc), ParseError);
}

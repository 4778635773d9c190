#include <doctest.h>

#include "hornlog/syntax.hpp"

using namespace hornlog;

namespace {
SimpleProduct P(std::string_view text) { return parse_product(text); }
HornFormula F(std::string_view text) { return parse_formula(text); }
}  // namespace

TEST_CASE("product equivalence") {
  CHECK(product_equiv(P("l1*r1*r1"), P("r1*l1*r1")));
  CHECK_FALSE(product_equiv(P("l1*r1"), P("l1*r1*r1")));
  CHECK(product_equiv(P("q"), P("q")));
  CHECK(to_string(P("r1*l1*r1")) == "l1*r1*r1");
}

TEST_CASE("antecedent matching") {
  CHECK(match_antecedent(P("l1*r1*r1"), P("l1*r1")) == Frame{"r1"});
  const auto exact = match_antecedent(P("l1"), P("l1"));
  REQUIRE(exact);
  CHECK(exact->empty());
  CHECK_FALSE(match_antecedent(P("l1*r2"), P("l1*r1")));
}

TEST_CASE("applying implications") {
  CHECK(apply_implication(P("l1*r1*r1"), F("(l1*r1) -o l1")) == P("l1*r1"));
  CHECK(apply_implication(P("k1*r2"), F("(k1*r2) -o k1")) == P("k1"));
  CHECK_FALSE(apply_implication(P("l0"), F("l1 -o l2")));
  CHECK_THROWS_AS(apply_implication(P("l1"), F("l1 -o (l0 + k1)")), std::invalid_argument);
}

TEST_CASE("frames") {
  Frame f{"b", "a", "b"};
  CHECK(f.size() == 3);
  CHECK(f.count("b") == 2);
  CHECK(f.includes(Frame{"a", "b"}));
  CHECK_FALSE(f.includes(Frame{"a", "a"}));
  CHECK(f.minus(Frame{"b"}) == Frame{"a", "b"});
  CHECK_FALSE(f.minus(Frame{"c"}));
  CHECK(to_string(Frame{}) == "");
  CHECK(P("a") * Frame{} == P("a"));
  CHECK_THROWS_AS(SimpleProduct(Frame{}), std::invalid_argument);
  CHECK_THROWS_AS(Frame{"1a"}, std::invalid_argument);
}

TEST_CASE("oplus alternatives commute up to canonical form") {
  const HornFormula a = F("x -o (b + a)");
  const HornFormula b = F("x -o (a + b)");
  CHECK(a != b);
  CHECK(formula_equiv(a, b));
  CHECK(to_string(a) == "x -o (b + a)");
  CHECK(a.canonical() == b);
  CHECK_THROWS_AS(F("x -o y").right(), std::logic_error);
}

TEST_CASE("formula and sequent text") {
  CHECK(to_string(F("l1*r1 -o l1")) == "(l1*r1) -o l1");
  CHECK(to_string(F("(l1*r1) -o (l1*r1)")) == "(l1*r1) -o (l1*r1)");
  CHECK(to_string(F("l1 -o (l0 + k1)")) == "l1 -o (l0 + k1)");

  const std::string text = "l1*r1*r1 ; a -o b ; l1 -o (l0 + k1), (l1*r1) -o l1 |- l0";
  const HornSequent s = parse_sequent(text);
  CHECK(to_string(s) == text);
  CHECK(s.linear.size() == 1);
  CHECK(s.banged.size() == 2);
  CHECK(to_string(parse_sequent("q;;|-q")) == "q ; ; |- q");
}

TEST_CASE("sequents compare zones as multisets") {
  const HornSequent a = parse_sequent("a ; a -o b, b -o c ; |- c");
  const HornSequent b = parse_sequent("a ; b -o c, a -o b ; |- c");
  const HornSequent c = parse_sequent("a ; b -o c ; a -o b |- c");
  CHECK(sequent_equiv(a, b));
  CHECK_FALSE(sequent_equiv(a, c));
  CHECK(occurrences(parse_sequent("a ; a -o b, a -o b ; |- b").linear, F("a -o b")) == 2);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_sequent("a ; a -o ; |- b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
    CHECK(std::string(e.what()).rfind("1:10: ", 0) == 0);
    CHECK(e.what() == "1:10: " + e.message());
  }
  CHECK_THROWS_AS(parse_product(""), ParseError);
  CHECK_THROWS_AS(parse_product("a * "), ParseError);
  CHECK_THROWS_AS(parse_product("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a -o (b + )"), ParseError);
  CHECK_THROWS_AS(parse_formula("a -o b -o c"), ParseError);
  CHECK_THROWS_AS(parse_sequent("a ; ; |-"), ParseError);
}

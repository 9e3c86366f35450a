#include <catch2/catch_amalgamated.hpp>

#include "srmt/parser.hpp"

using namespace srmt;

TEST_CASE("surface text round-trips through parse and print", "[parser]") {
  for (const char* text : {"P(x)", "!P(x)", "E x1. P(x1)", "A x. P(x) | Q(x)",
                           "E x. P(x) & Q(x)^2", "E x. A y. R(x, y) | x = y",
                           "P(x) & Q(x)", "x != y", "3 * P(a)", "R(x, y)^4"}) {
    CAPTURE(text);
    FormulaPtr f = parse_formula(text);
    REQUIRE(print_formula(f) == text);
    REQUIRE(formula_cmp(parse_formula(print_formula(f)), f) == 0);
  }
}

TEST_CASE("parsing canonicalizes child order", "[parser]") {
  REQUIRE(print_formula(parse_formula("Q(x) & P(x)")) == "P(x) & Q(x)");
  REQUIRE(print_formula(parse_formula("Q(x) | P(x) | !P(x)")) == "P(x) | !P(x) | Q(x)");
  REQUIRE(print_formula(parse_formula("y = x")) == "x = y");
  REQUIRE(print_formula(parse_formula("(P(x) & Q(x)) & R(x, y)")) == "P(x) & Q(x) & R(x, y)");
  REQUIRE(print_formula(parse_formula("P(x)^2^3")) == "P(x)^6");
  REQUIRE(print_formula(parse_formula("P(x)^1")) == "P(x)");
}

TEST_CASE("quantifiers reach as far right as possible", "[parser]") {
  FormulaPtr f = parse_formula("E x. P(x) & Q(x)");
  REQUIRE(f->kind == FKind::Exists);
  REQUIRE(quantifier_rank(f) == 1);
  REQUIRE(print_formula(f) == "E x. P(x) & Q(x)");

  FormulaPtr scoped = parse_formula("(E x. P(x)) & Q(y)");
  REQUIRE(scoped->kind == FKind::And);
}

TEST_CASE("disjunction binds looser than conjunction", "[parser]") {
  FormulaPtr f = parse_formula("P(x) & Q(x) | R(x, y)");
  REQUIRE(f->kind == FKind::Or);
  REQUIRE(f->children.size() == 2);
}

TEST_CASE("malformed formulas report syntax errors", "[parser]") {
  for (const char* text : {"", "P(", "P(x", "E x P(x)", "P(x) &", "& P(x)", "P(x)^0",
                           "0 * P(x)", "!x = y", "P(x))", "P(x) Q(x)", "x ="}) {
    CAPTURE(text);
    REQUIRE_THROWS_AS(parse_formula(text), error);
  }
}

TEST_CASE("negation applies only to relation atoms", "[parser]") {
  FormulaPtr f = parse_formula("!R(x, y)");
  REQUIRE(f->kind == FKind::Lit);
  REQUIRE_FALSE(f->positive);
  REQUIRE_THROWS_AS(parse_formula("!(P(x) & Q(x))"), error);
  REQUIRE_THROWS_AS(parse_formula("!!P(x)"), error);
}

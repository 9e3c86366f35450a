#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "srmt/semiring.hpp"

using namespace srmt;

namespace {

Polynomial parse_as(Kind kind, const char* text) { return Polynomial::parse(kind, text); }

}  // namespace

TEST_CASE("natural coefficients merge and zeros vanish", "[poly]") {
  REQUIRE(parse_as(Kind::NatPoly, "x + x") == parse_as(Kind::NatPoly, "2*x"));
  REQUIRE(parse_as(Kind::NatPoly, "x + 0") == parse_as(Kind::NatPoly, "x"));
  REQUIRE(parse_as(Kind::NatPoly, "0*x") == parse_as(Kind::NatPoly, "0"));
  REQUIRE(parse_as(Kind::NatPoly, "0").str() == "0");
  REQUIRE(parse_as(Kind::NatPoly, "2*x + 3*x + y").str() == "5*x + y");
}

TEST_CASE("boolean coefficients clamp while exponents survive", "[poly]") {
  REQUIRE(parse_as(Kind::BoolPoly, "x + x") == parse_as(Kind::BoolPoly, "x"));
  REQUIRE(parse_as(Kind::BoolPoly, "3*x*y") == parse_as(Kind::BoolPoly, "x*y"));
  REQUIRE(parse_as(Kind::BoolPoly, "x^2") != parse_as(Kind::BoolPoly, "x"));
  REQUIRE(parse_as(Kind::BoolPoly, "x^2 + x").str() == "x + x^2");
}

TEST_CASE("why-polynomials are multilinear with unit coefficients", "[poly]") {
  REQUIRE(parse_as(Kind::WhyPoly, "x^2") == parse_as(Kind::WhyPoly, "x"));
  REQUIRE(parse_as(Kind::WhyPoly, "x^3*y^2") == parse_as(Kind::WhyPoly, "x*y"));
  SemiringTag tag = SemiringTag::whypoly(VarSet({"x", "y"}));
  Value sum = Value::parse(tag, "x + y");
  REQUIRE(sr_mul(sum, sum) == Value::parse(tag, "x + y + x*y"));
}

TEST_CASE("absorptive polynomials keep only the antichain", "[poly]") {
  REQUIRE(parse_as(Kind::AbsPoly, "x + x*y") == parse_as(Kind::AbsPoly, "x"));
  REQUIRE(parse_as(Kind::AbsPoly, "x + x^2") == parse_as(Kind::AbsPoly, "x"));
  REQUIRE(parse_as(Kind::AbsPoly, "x^2 + y^2 + x*y").str() == "x*y + x^2 + y^2");
  REQUIRE(parse_as(Kind::AbsPoly, "1 + x") == parse_as(Kind::AbsPoly, "1"));
  REQUIRE(parse_as(Kind::PosBool, "x^2 + x*y") == parse_as(Kind::PosBool, "x"));
  REQUIRE(parse_as(Kind::PosBool, "1 + x*y") == parse_as(Kind::PosBool, "1"));
}

TEST_CASE("divisibility drives absorption", "[poly]") {
  Monomial x = Monomial::var("x");
  Monomial xy = x.times(Monomial::var("y"));
  Monomial x2 = x.times(x);
  REQUIRE(mono_absorbs(x, xy));
  REQUIRE(mono_absorbs(x, x2));
  REQUIRE_FALSE(mono_absorbs(xy, x));
  REQUIRE_FALSE(mono_absorbs(x2, xy));
  REQUIRE(mono_absorbs(Monomial::unit(), x));
}

TEST_CASE("cancellation products come out exactly", "[poly]") {
  SemiringTag bx = SemiringTag::boolpoly(VarSet({"x", "y"}));
  Value a = Value::parse(bx, "x + y + x^2 + x*y + y^2");
  Value b = Value::parse(bx, "x^2 + y^2");
  Value c = Value::parse(bx, "x^2 + x*y + y^2");
  Value product = Value::parse(
      bx, "x^3 + x*y^2 + x^2*y + y^3 + x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4");
  REQUIRE(sr_mul(a, b) == product);
  REQUIRE(sr_mul(a, c) == product);
  REQUIRE(product.as_poly().terms().size() == 9);

  SemiringTag sx = SemiringTag::abspoly(VarSet({"x", "y"}));
  Value sa = Value::parse(sx, "x + y");
  Value sb = Value::parse(sx, "x^2 + y^2");
  Value sc = Value::parse(sx, "x^2 + x*y + y^2");
  Value sp = Value::parse(sx, "x^3 + x^2*y + x*y^2 + y^3");
  REQUIRE(sr_mul(sa, sb) == sp);
  REQUIRE(sr_mul(sa, sc) == sp);
  REQUIRE(sp.as_poly().terms().size() == 4);
  REQUIRE(sr_add(sa, sb) == sa);
  REQUIRE(sr_add(sa, sc) == sa);
}

TEST_CASE("sampled polynomials respect their variant invariants", "[poly]") {
  std::mt19937_64 rng(411);
  VarSet xy({"x", "y"});
  for (int round = 0; round < 200; ++round) {
    Polynomial bp = random_value(SemiringTag::boolpoly(xy), rng).as_poly();
    for (const auto& [mono, coeff] : bp.terms()) REQUIRE(coeff == 1);

    Polynomial wp = random_value(SemiringTag::whypoly(xy), rng).as_poly();
    for (const auto& [mono, coeff] : wp.terms()) {
      REQUIRE(coeff == 1);
      for (const auto& [name, exp] : mono.exps) REQUIRE(exp == 1);
    }

    Polynomial ap = random_value(SemiringTag::abspoly(xy), rng).as_poly();
    for (const auto& [m1, c1] : ap.terms())
      for (const auto& [m2, c2] : ap.terms())
        if (!(m1 == m2)) REQUIRE_FALSE(mono_absorbs(m1, m2));
  }
}

TEST_CASE("multiplication distributes over sampled sums", "[poly]") {
  std::mt19937_64 rng(412);
  VarSet xy({"x", "y"});
  for (const SemiringTag& tag :
       {SemiringTag::natpoly(xy), SemiringTag::boolpoly(xy), SemiringTag::whypoly(xy),
        SemiringTag::abspoly(xy), SemiringTag::posbool(xy)}) {
    for (int round = 0; round < 50; ++round) {
      Value a = random_value(tag, rng);
      Value b = random_value(tag, rng);
      Value c = random_value(tag, rng);
      REQUIRE(sr_mul(a, sr_add(b, c)) == sr_add(sr_mul(a, b), sr_mul(a, c)));
    }
  }
}

TEST_CASE("malformed polynomial text is rejected", "[poly]") {
  REQUIRE_THROWS_AS(parse_as(Kind::NatPoly, "x + + y"), error);
  REQUIRE_THROWS_AS(parse_as(Kind::NatPoly, "x^"), error);
  REQUIRE_THROWS_AS(parse_as(Kind::NatPoly, ""), error);
  REQUIRE_THROWS_AS(parse_as(Kind::NatPoly, "x y"), error);
  REQUIRE_THROWS_AS(Value::parse(SemiringTag::natpoly(VarSet({"x", "y"})), "z"), error);
}

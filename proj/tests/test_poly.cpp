#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellred/poly.hpp"
#include "test_support.hpp"

using namespace pellred;
using pellred::testing::P;
using pellred::testing::random_poly;
using pellred::testing::random_poly_of_degree;

TEST_CASE("degree sentinel") {
  CHECK(IntPoly().degree().is_neg_inf());
  CHECK(IntPoly().degree() < Degree(0));
  CHECK(IntPoly(7).degree() == Degree(0));
  CHECK(P("x^3-x").degree() == Degree(3));
  CHECK((Degree::neg_inf() + Degree(4)).is_neg_inf());
  CHECK(Degree(2) + Degree(3) == Degree(5));
  CHECK_THROWS_AS(IntPoly().degree().value(), std::logic_error);
}

TEST_CASE("construction canonicalizes") {
  IntPoly p(std::vector<Integer>{1, 2, 0, 0});
  CHECK(p.coeffs().size() == 2);
  CHECK(IntPoly(std::vector<Integer>{0, 0}).is_zero());
  RatPoly r(std::vector<Rational>{Rational(2, 4), Rational(3, -6)});
  CHECK(r.coeff(0) == Rational(1, 2));
  CHECK(r.coeff(1).get_den() == 2);
  CHECK(pellred::testing::is_canonical(r));
}

TEST_CASE("arithmetic examples") {
  CHECK(P("x^2+1") * P("x^2-1") == P("x^4-1"));
  CHECK(IntPoly() * P("3x^5+x") == IntPoly());
  CHECK(P("2x^2+3") * P("2x") == P("4x^3+6x"));
  CHECK(P("x^3+2") + P("-x^3+x") == P("x+2"));
  CHECK((P("x^3+2") - P("x^3+2")).is_zero());
  CHECK(-P("x-1") == P("-x+1"));
  CHECK(P("x+1").pow(3) == P("x^3+3x^2+3x+1"));
  CHECK(P("x+1").pow(0) == IntPoly(1));
}

TEST_CASE("scale and exact integer division") {
  CHECK(scale(P("2x^4+2"), Rational(-1, 2)) == to_rat(P("-x^4-1")));
  CHECK(scale(P("x^3-5"), Rational(1)) == to_rat(P("x^3-5")));
  const RatPoly third = scale(P("x"), Rational(1, 3));
  CHECK(third.coeff(1) == Rational(1, 3));
  CHECK_FALSE(is_integral(third));

  CHECK(div_exact_int(to_rat(P("-x^4-1"))) == P("-x^4-1"));
  CHECK(div_exact_int(scale(P("8x^8+16x^4+4"), Rational(1, 4))) == P("2x^8+4x^4+1"));
  try {
    div_exact_int(scale(P("2x^2+3"), Rational(-1, 3)));
    FAIL("expected NotIntegral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIntegral);
  }
}

TEST_CASE("compose") {
  CHECK(compose(P("x^2"), P("x^2")) == P("x^4"));
  CHECK(compose(P("2x^4-1"), P("x^2")) == P("2x^8-1"));
  CHECK(compose(P("7x^5-3x+2"), P("x")) == P("7x^5-3x+2"));
  CHECK(compose(IntPoly(), P("x+1")) == IntPoly());
  CHECK(compose(P("x^2"), P("x+1")) == P("x^2+2x+1"));
}

TEST_CASE("polynomial square root") {
  CHECK(poly_sqrt(P("x^4+2x^2+1")) == P("x^2+1"));
  CHECK_FALSE(poly_sqrt(P("x^2+1")).has_value());
  CHECK(poly_sqrt(P("4x^6-4x^3+1")) == P("2x^3-1"));
  CHECK(poly_sqrt(IntPoly()) == IntPoly());
  CHECK(poly_sqrt(IntPoly(9)) == IntPoly(3));
  CHECK_FALSE(poly_sqrt(P("x^3")).has_value());
  CHECK_FALSE(poly_sqrt(P("2x^2")).has_value());
  CHECK_FALSE(poly_sqrt(P("-x^2")).has_value());
  // Leading coefficient is square but the lower part does not divide by 2a.
  CHECK_FALSE(poly_sqrt(P("x^2+x")).has_value());
}

TEST_CASE("divmod and exact division over Q") {
  auto [q, r] = divmod(to_rat(P("x^3+2x+5")), to_rat(P("2x+1")));
  CHECK(q * to_rat(P("2x+1")) + r == to_rat(P("x^3+2x+5")));
  CHECK(r.degree() < Degree(1));
  CHECK(div_exact(to_rat(P("x^4-1")), to_rat(P("x^2+1"))) == to_rat(P("x^2-1")));
  CHECK_THROWS_AS(div_exact(to_rat(P("x^2")), to_rat(P("x+1"))), Error);
  CHECK_THROWS_AS(divmod(to_rat(P("x")), RatPoly()), Error);
}

TEST_CASE("parse") {
  CHECK(parse_poly("x^4-1") == IntPoly{-1, 0, 0, 0, 1});
  CHECK(parse_poly("2x^2+3") == IntPoly{3, 0, 2});
  CHECK(parse_poly("-x^4-1") == IntPoly{-1, 0, 0, 0, -1});
  CHECK(parse_poly(" 3 x ^ 2 - x + x ") == IntPoly{0, 0, 3});
  CHECK(parse_poly("x^2+-3") == IntPoly{-3, 0, 1});
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("123456789012345678901234567890x").coeff(1) ==
        Integer("123456789012345678901234567890"));

  auto position_of = [](std::string_view text) -> long {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("x^^2") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("x^") == 2);
  CHECK(position_of("2x+") == 3);
  CHECK(position_of("2y") == 1);
  CHECK(position_of("x^99999999") == 2);
}

TEST_CASE("format") {
  CHECK(to_string(P("4x^6-3x^2")) == "4x^6-3x^2");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(to_string(IntPoly{-1, 0, 0, 0, -1}) == "-x^4-1");
  CHECK(to_string(IntPoly{0, 1}) == "x");
  CHECK(to_string(IntPoly{1, -1}) == "-x+1");
  CHECK(to_string(scale(P("2x^2-1"), Rational(1, 3))) == "(2/3)x^2-(1/3)");
  CHECK(to_string(to_rat(P("5x-2"))) == "5x-2");
}

TEST_CASE("json") {
  const nlohmann::json j = to_json(P("4x^4-1"));
  CHECK(j.dump() == R"({"coeffs":["-1","0","0","0","4"]})");
  CHECK(int_poly_from_json(j) == P("4x^4-1"));

  const RatPoly r = scale(P("2x+3"), Rational(-1, 3));
  const nlohmann::json jr = to_json(r);
  CHECK(jr.contains("den"));
  CHECK(rat_poly_from_json(jr) == r);
  CHECK_THROWS_AS(int_poly_from_json(jr), Error);
  CHECK_THROWS_AS(rat_poly_from_json(nlohmann::json::parse(R"({"coeffs":["a"]})")), ParseError);
  CHECK_THROWS_AS(rat_poly_from_json(nlohmann::json::parse(R"({"c":[]})")), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(0x5eed1);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = random_poly(rng, 8, 1000000);
    const IntPoly b = random_poly(rng, 8, 1000000);
    const IntPoly c = random_poly(rng, 8, 1000000);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(pellred::testing::is_canonical(a * b - b * a));
    CHECK(pellred::testing::is_canonical(a - a));
    // Evaluation is a ring homomorphism; independent of the product loop.
    for (long t : {-3L, -1L, 0L, 2L, 7L}) {
      CHECK((a * b).eval(Integer(t)) == a.eval(Integer(t)) * b.eval(Integer(t)));
      CHECK(compose(a, b).eval(Integer(t)) == a.eval(b.eval(Integer(t))));
    }
  }
}

TEST_CASE("parse and format are inverse on canonical polynomials") {
  std::mt19937_64 rng(0x5eed2);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = random_poly(rng, 10, 50);
    CHECK(parse_poly(to_string(a)) == a);
    CHECK(to_string(parse_poly(to_string(a))) == to_string(a));
    CHECK(int_poly_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
  }
  CHECK(to_string(parse_poly("1+x+x^2+x")) == "x^2+2x+1");
}

TEST_CASE("square root of squares") {
  std::mt19937_64 rng(0x5eed3);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = random_poly(rng, 6, 1000);
    auto root = poly_sqrt(a * a);
    REQUIRE(root.has_value());
    CHECK((*root == a || *root == -a));
    if (!a.is_zero()) CHECK(sgn(root->leading()) > 0);
  }
}

TEST_CASE("rational product matches schoolbook") {
  std::mt19937_64 rng(0x4b0f);
  std::uniform_int_distribution<long> den(1, 12);
  auto random_rat = [&](unsigned degree) {
    std::vector<Rational> c;
    const IntPoly nums = random_poly_of_degree(rng, degree, 20);
    for (const auto& v : nums.coeffs()) {
      Rational q(v, den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    return RatPoly(std::move(c));
  };
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly a = random_rat(1 + trial % 30), b = random_rat(2 + (trial * 5) % 25);
    const RatPoly fast = a * b;
    CHECK(fast == RatPoly::mul_schoolbook(a, b));
    CHECK(pellred::testing::is_canonical(fast));
  }
}

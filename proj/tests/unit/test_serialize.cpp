#include "doctest.h"
#include "klk/errors.hpp"
#include "klk/expr.hpp"
#include "klk/gray.hpp"
#include "klk/random.hpp"
#include "klk/serialize.hpp"

using namespace klk;

TEST_CASE("scalar round trip") {
  Scalar x = Scalar::monomial(1, -1, 2);
  std::string text = to_json(x);
  CHECK(text == R"({"terms":[{"pi":-1,"lambda":2,"coeff":"1/1"}]})");
  CHECK(scalar_from_json(text) == x);
  CHECK(to_json(Scalar()) == R"({"terms":[]})");
}

TEST_CASE("flat valuation round trip") {
  Rng rng(77);
  const FlatBasis bases[] = {FlatBasis::Monomial, FlatBasis::Mu, FlatBasis::Tau};
  for (int i = 0; i < 30; ++i) {
    auto x = random_flat_valuation(rng, 1 + i % 3, bases[i % 3]);
    std::string text = to_json(x);
    CHECK(flat_valuation_from_json(text) == x);
    CHECK(to_json(flat_valuation_from_json(text)) == text);
  }
}

TEST_CASE("other round trips") {
  Rng rng(78);
  for (int i = 0; i < 20; ++i) {
    auto f = random_double_form(rng, 2, 1 + i % 3, i % 4);
    CHECK(double_form_from_json(to_json(f)) == f);
    auto p = random_graded_poly(rng, 6);
    CHECK(graded_poly_from_json(to_json(p)) == p);
    auto c = random_curved_valuation(rng, 2, i % 2 ? CurvedBasis::MuLambda : CurvedBasis::TauLambda);
    CHECK(curved_valuation_from_json(to_json(c)) == c);
    auto e = random_curv_element(rng, 2);
    CHECK(curv_element_from_json(to_json(e)) == e);
  }
}

TEST_CASE("parse errors carry a location") {
  try {
    scalar_from_json(R"({"terms":[{"pi":1,"lambda":0,"coeff":"1/0"}]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location >= 0);
  }
  try {
    flat_valuation_from_json(R"({"n":2,"basis":"mu",)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location > 0);
  }
  CHECK_THROWS_AS(flat_valuation_from_json(R"({"n":2,"basis":"nope","coords":[]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_csv("row,col,value\n0,x,1/2\n"), ParseError);
}

TEST_CASE("pairing tables for n = 3") {
  CHECK(gray_pairing_csv(3, 0) == "row,col,value\n0,0,8/5\n");
  CHECK(gray_pairing_csv(3, 2) == "row,col,value\n0,0,8/5\n0,1,4/5\n1,0,4/5\n1,1,4/5\n");
  CHECK(gray_pairing_csv(3, 3) == "row,col,value\n0,0,4/5\n0,1,4/5\n1,0,4/5\n1,1,1/1\n");
  // entries are 2^a C_{n-a} / C_n with a the total power of s
  auto M = gray_pairing_matrix(3, 2);
  CHECK(M[0][0] == Rational(8) * catalan(0) / catalan(3));
  CHECK(M[1][1] == Rational(2) * catalan(2) / catalan(3));
  CHECK(matrix_from_csv(gray_pairing_csv(3, 4)) == gray_pairing_matrix(3, 4));
}

TEST_CASE("expressions") {
  CHECK(parse_expression("s*t") == ScalarPoly::monomial(1, 1));
  CHECK(parse_expression("2/3") == ScalarPoly::constant(Scalar(make_rational(2, 3))));
  CHECK(parse_expression("pi^-1*lambda^2") == ScalarPoly::constant(Scalar::monomial(1, -1, 2)));
  CHECK(parse_expression("(s + t)^2") == parse_expression("s^2 + 2*s*t + t^2"));
  CHECK(parse_expression("-t + +t").is_zero());
  try {
    parse_expression("s * (t + 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location == 10);
  }
  CHECK_THROWS_AS(parse_expression("s^-1"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expression("x"), ParseError);
  CHECK_THROWS_AS(parse_expression("t^99999"), ParseError);
}

#include "doctest.h"

#include <string>

#include "cherednik/expr.hpp"
#include "cherednik/gl2.hpp"

using namespace cherednik;

namespace {

std::string round_trip(const std::string& text) {
  return print_expression(parse_expression(text));
}

// Returns "line:col" of the syntax error, or "" if the text parses.
std::string error_position(const std::string& text) {
  try {
    (void)parse_expression(text);
  } catch (const ParseError& e) {
    return std::to_string(e.line) + ":" + std::to_string(e.col);
  }
  return "";
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("precedence and association") {
  CHECK(round_trip("1 + 2*3") == "1 + 2*3");
  CHECK(round_trip("(1 + 2)*3") == "(1 + 2)*3");
  CHECK(round_trip("Delta + 3*tau^2") == "Delta + 3*tau^2");
  CHECK(round_trip("2^3") == "2^3");
  CHECK(round_trip("-(x + y)") == "-(x + y)");
  CHECK(round_trip("x - (y - e)") == "x - (y - e)");
  CHECK(round_trip("(x*y)^2") == "(x*y)^2");
  CHECK(round_trip("1/2*Delta") == "1/2*Delta");
}

TEST_CASE("printed output re-parses to an equal tree") {
  const char* samples[] = {
      "Delta + 3*tau^2",
      "y1*x - x1*y",
      "-(tau + 3/2)*(Delta - 1)^2",
      "h^2 + 4*e*f - 2*h",
      "1/3 - 2/7*tau^4*Delta^2",
      "(x^2)^3",
  };
  for (const char* s : samples) {
    ExprPtr once = parse_expression(s);
    ExprPtr twice = parse_expression(print_expression(once));
    CHECK_MESSAGE(expr_equal(once, twice), "sample: ", s);
  }
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(error_position("x ** 2") == "1:4");
  CHECK(error_position("bogus + 1") == "1:1");
  CHECK(error_position("x +\n* y") == "2:1");
  // A second exponent, a truncated sum, an unclosed parenthesis, a negative
  // exponent, and an empty input all error somewhere.
  CHECK_FALSE(error_position("x^2^3").empty());
  CHECK_FALSE(error_position("x + ").empty());
  CHECK_FALSE(error_position("(x + y").empty());
  CHECK_FALSE(error_position("x ^ -2").empty());
  CHECK_FALSE(error_position("").empty());
  CHECK(error_position("Delta + 3*tau^2").empty());
}

TEST_CASE("error messages name the problem") {
  try {
    (void)parse_expression("zeta + 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("zeta") != std::string::npos);
    CHECK(e.line == 1);
    CHECK(e.col == 1);
  }
}

TEST_CASE("central evaluation accepts Delta and tau only") {
  Field q = Field::rationals();
  CentralPoly v = eval_central(parse_expression("Delta + 3*tau^2"), q);
  CentralPoly expect = CentralPoly::delta(q) +
                       CentralPoly::tau(q).pow(2) * Scalar::from_int(q, 3);
  CHECK(v == expect);
  CHECK(eval_central(parse_expression("(tau - 1)*(tau + 1)"), q) ==
        CentralPoly::tau(q).pow(2) - CentralPoly::constant_int(q, 1));
  CHECK(eval_central(parse_expression("-2/3"), q) ==
        CentralPoly::constant(q, Scalar::from_fraction(q, -2, 3)));
  CHECK_THROWS_AS((void)eval_central(parse_expression("x + 1"), q), Error);
}

TEST_CASE("noncommutative evaluation respects operand order") {
  Field q = Field::rationals();
  auto algebra = Gl2CherednikAlgebra::build(CentralPoly::tau(q));
  const RelationTable& t = algebra.table();
  // [y1, x] = 1 when c = tau, so the two orderings differ by constants.
  NcPoly ab = eval_nc(parse_expression("y1*x"), t);
  NcPoly ba = eval_nc(parse_expression("x*y1"), t);
  CHECK(ab - ba == NcPoly::constant_int(q, t.order(), 1));
  CHECK(ab.to_string() == "1 + x*y1");
  // Delta expands through the embedding: h^2 + 4ef - 2h.
  CHECK(eval_nc(parse_expression("Delta"), t) ==
        eval_nc(parse_expression("h^2 + 4*e*f - 2*h"), t));
  CHECK(eval_nc(parse_expression("(x + y)^2"), t) ==
        eval_nc(parse_expression("x^2 + x*y + y*x + y^2"), t));
}

TEST_CASE("central evaluation in a prime field reduces coefficients") {
  Field f3 = Field::prime(3);
  CHECK(eval_central(parse_expression("Delta + 3*tau^2"), f3) ==
        CentralPoly::delta(f3));
  CHECK_THROWS_AS((void)eval_central(parse_expression("1/3"), f3),
                  DivisionByZeroError);
}

TEST_CASE("huge exponents are rejected instead of exhausting memory") {
  CHECK_THROWS_AS((void)parse_expression("tau^99999999"), ParseError);
}

}  // TEST_SUITE

#include "doctest.h"

#include "cherednik/engine.hpp"
#include "cherednik/expr.hpp"
#include "cherednik/gl2.hpp"
#include "cherednik/modp.hpp"

using namespace cherednik;

namespace {

Gl2CherednikAlgebra build_c(const Field& f, const std::string& text) {
  return Gl2CherednikAlgebra::build(eval_central(parse_expression(text), f));
}

}  // namespace

TEST_SUITE("modp") {

TEST_CASE("p-squared powers of the vector letters are central") {
  Field f2 = Field::prime(2);
  auto algebra = build_c(f2, "tau");
  for (Gen v : {Gen::x, Gen::y, Gen::x1, Gen::y1}) {
    ModpClaim claim = p_square_central(algebra, v);
    CHECK_MESSAGE(claim.pass, claim.claim, ": ", claim.residual);
  }
}

TEST_CASE("p-th powers land in the unstarred subalgebra as iterated brackets") {
  Field f3 = Field::prime(3);
  auto algebra = build_c(f3, "Delta + 3*tau^2");
  for (Gen v : {Gen::x, Gen::y}) {
    for (Gen w : {Gen::x1, Gen::y1}) {
      ModpClaim claim = p_power_landing(algebra, v, w);
      CHECK_MESSAGE(claim.pass, claim.claim, ": ", claim.residual);
    }
  }
}

TEST_CASE("restricted powers at p = 3") {
  Field f3 = Field::prime(3);
  auto algebra = build_c(f3, "tau");
  auto claims = restricted_powers_central(algebra);
  CHECK(claims.size() == 4);
  for (const ModpClaim& c : claims) CHECK_MESSAGE(c.pass, c.claim);
}

TEST_CASE("restricted powers need p at least 3") {
  Field f2 = Field::prime(2);
  auto algebra = build_c(f2, "tau");
  CHECK_THROWS_AS((void)restricted_powers_central(algebra), Error);
}

TEST_CASE("the claims demand a prime field") {
  Field q = Field::rationals();
  auto algebra = build_c(q, "tau");
  CHECK_THROWS_AS((void)p_square_central(algebra, Gen::x), Error);
  CHECK_THROWS_AS((void)p_power_landing(algebra, Gen::x, Gen::x1), Error);
  CHECK_THROWS_AS((void)restricted_powers_central(algebra), Error);
}

TEST_CASE("full suites pass for the reference parameters") {
  for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}}) {
    Field fp = Field::prime(p);
    for (const char* ctext : {"0", "tau"}) {
      auto algebra = build_c(fp, ctext);
      ModpReport report = run_modp_suite(algebra);
      CHECK(report.p == p);
      CHECK_MESSAGE(report.all_pass(), "p = ", p, ", c = ", ctext);
      // 4 centrality claims + 4 landing claims, plus 4 restricted at p = 3.
      CHECK(report.entries.size() == (p == 2 ? 8 : 12));
    }
  }
}

TEST_CASE("a specific p-center commutator: [x^9, y1] vanishes at p = 3") {
  Field f3 = Field::prime(3);
  auto algebra = build_c(f3, "tau");
  const RelationTable& t = algebra.table();
  NcPoly x9 = power(NcPoly::generator(f3, t.order(), Gen::x), 9, t);
  NcPoly y1 = NcPoly::generator(f3, t.order(), Gen::y1);
  CHECK(commutator(x9, y1, t).is_zero());
  // The same commutator is nonzero over the rationals.
  Field q = Field::rationals();
  auto rational = build_c(q, "tau");
  const RelationTable& tq = rational.table();
  NcPoly x9q = power(NcPoly::generator(q, tq.order(), Gen::x), 9, tq);
  NcPoly y1q = NcPoly::generator(q, tq.order(), Gen::y1);
  CHECK_FALSE(commutator(x9q, y1q, tq).is_zero());
}

}  // TEST_SUITE

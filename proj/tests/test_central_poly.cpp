#include "doctest.h"

#include "cherednik/central_poly.hpp"

using namespace cherednik;

namespace {

CentralPoly cp(const Field& f, std::initializer_list<std::array<long long, 3>> terms) {
  CentralPoly p(f);
  for (const auto& t : terms)
    p.add_term(static_cast<int>(t[0]), static_cast<int>(t[1]), Scalar::from_int(f, t[2]));
  return p;
}

}  // namespace

TEST_SUITE("central-poly") {

TEST_CASE("ring operations and printing") {
  Field q = Field::rationals();
  CentralPoly d = CentralPoly::delta(q);
  CentralPoly t = CentralPoly::tau(q);
  CentralPoly p = d * d + t * Scalar::from_int(q, 3) - CentralPoly::constant_int(q, 1);
  CHECK(p.to_string() == "-1 + 3*tau + Delta^2");
  CHECK(p.delta_degree() == 2);
  CHECK(p.tau_degree() == 1);
  CHECK(p.total_degree() == 2);
  CHECK(p.coefficient(0, 1) == Scalar::from_int(q, 3));
  CHECK(p.coefficient(5, 5).is_zero());
  CHECK((p - p).is_zero());
  CHECK((d * t).to_string() == "Delta*tau");
  CHECK(d.pow(3) == d * d * d);
  CHECK(CentralPoly::constant_int(q, 0).to_string() == "0");
}

TEST_CASE("cancellation drops terms completely") {
  Field q = Field::rationals();
  CentralPoly p = cp(q, {{2, 0, 1}, {0, 1, 5}});
  CentralPoly r = p - cp(q, {{2, 0, 1}}) - cp(q, {{0, 1, 5}});
  CHECK(r.is_zero());
  CHECK(r.terms().empty());
  CHECK(r.delta_degree() == -1);  // degree of the zero polynomial
}

TEST_CASE("delta_coefficient slices by Delta power") {
  Field q = Field::rationals();
  // p = (3 tau + 1) Delta^2 + 2 Delta + 7
  CentralPoly p = cp(q, {{2, 1, 3}, {2, 0, 1}, {1, 0, 2}, {0, 0, 7}});
  CHECK(p.delta_coefficient(2) == cp(q, {{0, 1, 3}, {0, 0, 1}}));
  CHECK(p.delta_coefficient(1) == CentralPoly::constant_int(q, 2));
  CHECK(p.delta_coefficient(0) == CentralPoly::constant_int(q, 7));
  CHECK(p.delta_coefficient(3).is_zero());
}

TEST_CASE("pure_tau_part strips everything with a Delta factor") {
  Field q = Field::rationals();
  CentralPoly p = cp(q, {{2, 1, 3}, {0, 2, 4}, {0, 0, -1}});
  CHECK(p.pure_tau_part() == cp(q, {{0, 2, 4}, {0, 0, -1}}));
}

TEST_CASE("discrete derivative in tau") {
  Field q = Field::rationals();
  CentralPoly t = CentralPoly::tau(q);
  // psi(tau) - psi(tau - 1):
  //   tau    -> 1
  //   tau^2  -> 2 tau - 1
  //   tau^3  -> 3 tau^2 - 3 tau + 1
  CHECK(discrete_derivative(t) == CentralPoly::constant_int(q, 1));
  CHECK(discrete_derivative(t * t) == cp(q, {{0, 1, 2}, {0, 0, -1}}));
  CHECK(discrete_derivative(t.pow(3)) == cp(q, {{0, 2, 3}, {0, 1, -3}, {0, 0, 1}}));
  CHECK(discrete_derivative(CentralPoly::constant_int(q, 42)).is_zero());
  // Any Delta content is rejected: the operator is defined on k[tau] only.
  CentralPoly d = CentralPoly::delta(q);
  CHECK_THROWS_AS(discrete_derivative(d * t), Error);
  // Agreement with the shift: psi' = psi - psi(tau - 1).
  CentralPoly psi = t.pow(4) - t * Scalar::from_int(q, 7) +
                    CentralPoly::constant_int(q, 3);
  CHECK(discrete_derivative(psi) ==
        psi - substitute_shift(psi, CentralVar::tau, Scalar::from_int(q, -1)));
}

TEST_CASE("substitute_shift expands binomially") {
  Field q = Field::rationals();
  CentralPoly t = CentralPoly::tau(q);
  CentralPoly d = CentralPoly::delta(q);
  Scalar minus_one = Scalar::from_int(q, -1);
  // tau^2 at tau -> tau - 1: tau^2 - 2 tau + 1
  CHECK(substitute_shift(t * t, CentralVar::tau, minus_one) ==
        cp(q, {{0, 2, 1}, {0, 1, -2}, {0, 0, 1}}));
  // Delta at Delta -> Delta + 2
  CHECK(substitute_shift(d, CentralVar::delta, Scalar::from_int(q, 2)) ==
        cp(q, {{1, 0, 1}, {0, 0, 2}}));
  // Shifting tau leaves Delta powers alone.
  CHECK(substitute_shift(d.pow(2), CentralVar::tau, minus_one) == d.pow(2));
}

TEST_CASE("substitute_shift binomials survive characteristic p") {
  Field f2 = Field::prime(2);
  CentralPoly t = CentralPoly::tau(f2);
  Scalar one = Scalar::one(f2);
  // (tau + 1)^2 = tau^2 + 1 in F_2; the cross term 2 tau vanishes.
  CHECK(substitute_shift(t * t, CentralVar::tau, one) ==
        cp(f2, {{0, 2, 1}, {0, 0, 1}}));
  // (tau + 1)^4 = tau^4 + 1 in F_2.
  CHECK(substitute_shift(t.pow(4), CentralVar::tau, one) ==
        cp(f2, {{0, 4, 1}, {0, 0, 1}}));
}

TEST_CASE("shift by zero and composed shifts") {
  Field q = Field::rationals();
  CentralPoly p = cp(q, {{2, 2, 5}, {1, 0, -3}, {0, 1, 2}});
  CHECK(substitute_shift(p, CentralVar::tau, Scalar::zero(q)) == p);
  CentralPoly fwd = substitute_shift(p, CentralVar::tau, Scalar::one(q));
  CHECK(substitute_shift(fwd, CentralVar::tau, Scalar::from_int(q, -1)) == p);
}

TEST_CASE("cross-field central polynomials are rejected") {
  CentralPoly a = CentralPoly::delta(Field::rationals());
  CentralPoly b = CentralPoly::delta(Field::prime(3));
  CHECK_THROWS_AS((void)(a + b), FieldMismatchError);
}

}  // TEST_SUITE

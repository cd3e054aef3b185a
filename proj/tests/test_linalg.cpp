#include "doctest.h"

#include <vector>

#include "cherednik/gl2.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/ncpoly.hpp"

using namespace cherednik;

namespace {

SparseRow row(const Field& f, std::initializer_list<std::pair<std::size_t, long long>> es) {
  SparseRow r;
  for (const auto& [col, v] : es) r.emplace_back(col, Scalar::from_int(f, v));
  return r;
}

std::vector<Scalar> dense(const Field& f, std::initializer_list<long long> vs) {
  std::vector<Scalar> out;
  for (long long v : vs) out.push_back(Scalar::from_int(f, v));
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("nullspace of a rank-1 system") {
  Field q = Field::rationals();
  // x + 2y + 3z = 0 over 3 unknowns: kernel has dimension 2.
  std::vector<SparseRow> rows = {row(q, {{0, 1}, {1, 2}, {2, 3}})};
  auto basis = nullspace(rows, 3, q);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    Scalar acc = v[0] + v[1] * Scalar::from_int(q, 2) + v[2] * Scalar::from_int(q, 3);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("nullspace is canonical and empty for full rank") {
  Field q = Field::rationals();
  std::vector<SparseRow> rows = {row(q, {{0, 1}}), row(q, {{1, 1}})};
  CHECK(nullspace(rows, 2, q).empty());
  // Scaled copies of the same system give the identical canonical basis.
  std::vector<SparseRow> a = {row(q, {{0, 1}, {1, 1}})};
  std::vector<SparseRow> b = {row(q, {{0, 7}, {1, 7}})};
  CHECK(nullspace(a, 2, q) == nullspace(b, 2, q));
}

TEST_CASE("solve_affine picks the free-unknowns-zero solution") {
  Field q = Field::rationals();
  // x + y = 3 with y free: canonical answer (3, 0).
  std::vector<SparseRow> rows = {row(q, {{0, 1}, {1, 1}, {2, 3}})};
  auto sol = solve_affine(rows, 2, q);
  REQUIRE(sol.has_value());
  CHECK(*sol == dense(q, {3, 0}));
}

TEST_CASE("solve_affine detects inconsistency") {
  Field q = Field::rationals();
  std::vector<SparseRow> rows = {row(q, {{0, 1}, {1, 1}}),
                                 row(q, {{0, 1}, {1, 2}})};  // x = 1 and x = 2
  CHECK_FALSE(solve_affine(rows, 1, q).has_value());
}

TEST_CASE("solve_affine in a prime field") {
  Field f5 = Field::prime(5);
  // 2x = 3 mod 5  ->  x = 4.
  std::vector<SparseRow> rows = {row(f5, {{0, 2}, {1, 3}})};
  auto sol = solve_affine(rows, 1, f5);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Scalar::from_int(f5, 4));
}

TEST_CASE("rref rank and canonical form") {
  Field q = Field::rationals();
  std::vector<std::vector<Scalar>> m = {dense(q, {1, 2, 3}),
                                        dense(q, {2, 4, 6}),
                                        dense(q, {0, 1, 1})};
  CHECK(rref_dense(m, q) == 2);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == dense(q, {1, 0, 1}));
  CHECK(m[1] == dense(q, {0, 1, 1}));
}

TEST_CASE("same_span ignores basis presentation") {
  Field q = Field::rationals();
  std::vector<std::vector<Scalar>> a = {dense(q, {1, 0, 1}), dense(q, {0, 1, 1})};
  std::vector<std::vector<Scalar>> b = {dense(q, {1, 1, 2}), dense(q, {1, -1, 0})};
  std::vector<std::vector<Scalar>> c = {dense(q, {1, 1, 2})};
  CHECK(same_span(a, b, q));
  CHECK_FALSE(same_span(a, c, q));
  CHECK_FALSE(same_span(c, a, q));
}

TEST_CASE("express_in_span on noncommutative elements") {
  Field q = Field::rationals();
  auto algebra = Gl2CherednikAlgebra::build(CentralPoly(q));  // c = 0
  const RelationTable& t = algebra.table();
  NcPoly e = NcPoly::generator(q, t.order(), Gen::e);
  NcPoly h = NcPoly::generator(q, t.order(), Gen::h);
  NcPoly one = NcPoly::constant_int(q, t.order(), 1);
  NcPoly target = e * Scalar::from_int(q, 2) - h * Scalar::from_fraction(q, 1, 3) + one;

  auto coeffs = express_in_span(target, {one, h, e});
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0] == Scalar::from_int(q, 1));
  CHECK((*coeffs)[1] == Scalar::from_fraction(q, -1, 3));
  CHECK((*coeffs)[2] == Scalar::from_int(q, 2));

  // tau is not in span{1, h, e}.
  NcPoly tau = NcPoly::generator(q, t.order(), Gen::tau);
  CHECK_FALSE(express_in_span(tau, {one, h, e}).has_value());
}

TEST_CASE("same_span_nc compares spans of polynomials") {
  Field q = Field::rationals();
  auto algebra = Gl2CherednikAlgebra::build(CentralPoly(q));
  const GenOrder& ord = algebra.table().order();
  NcPoly e = NcPoly::generator(q, ord, Gen::e);
  NcPoly f = NcPoly::generator(q, ord, Gen::f);
  std::vector<NcPoly> a = {e + f, e - f};
  std::vector<NcPoly> b = {e, f};
  std::vector<NcPoly> c = {e};
  CHECK(same_span_nc(a, b, q));
  CHECK_FALSE(same_span_nc(a, c, q));
  CHECK_FALSE(same_span_nc(c, b, q));
}

}  // TEST_SUITE

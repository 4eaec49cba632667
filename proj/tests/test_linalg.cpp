#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freelie/linalg.hpp"

using namespace freelie;

namespace {

Matrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(nr, nc, f);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) m.at(r, c) = Scalar::from_long(f, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
  return m;
}

std::vector<Scalar> vec(const Field& f, const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::from_long(f, x));
  return out;
}

}  // namespace

TEST_CASE("rref finds rank and pivots") {
  Field q = Field::rationals();
  Matrix m = from_rows(q, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto pivots = rref(m);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m.at(0, 0) == Scalar::one(q));
  CHECK(m.at(0, 1).is_zero());
}

TEST_CASE("nullspace of a rank-1 matrix") {
  Field q = Field::rationals();
  Matrix m = from_rows(q, {{1, 2, 3}});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  // every basis vector is in the kernel
  for (const auto& v : ns) {
    Scalar acc = Scalar::zero(q);
    for (int c = 0; c < 3; ++c) acc = acc + m.at(0, c) * v[static_cast<size_t>(c)];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("nullspace of an invertible matrix is trivial") {
  Field q = Field::rationals();
  Matrix m = from_rows(q, {{2, 1}, {1, 1}});
  CHECK(nullspace(m).empty());
}

TEST_CASE("solve finds a particular solution or reports none") {
  Field q = Field::rationals();
  Matrix m = from_rows(q, {{1, 1}, {1, -1}});
  auto x = solve(m, vec(q, {3, 1}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::from_long(q, 2));
  CHECK((*x)[1] == Scalar::from_long(q, 1));

  Matrix bad = from_rows(q, {{1, 1}, {2, 2}});
  CHECK(!solve(bad, vec(q, {1, 3})).has_value());
  CHECK(solve(bad, vec(q, {1, 2})).has_value());
}

TEST_CASE("exact arithmetic avoids drift") {
  Field q = Field::rationals();
  // Hilbert-style fractions stay exact
  Matrix m(3, 3, q);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = Scalar::from_mpq(mpq_class(1, r + c + 1));
  auto x = solve(m, vec(q, {1, 0, 0}));
  REQUIRE(x.has_value());
  // Hilbert 3x3 inverse first column: 9, -36, 30
  CHECK((*x)[0] == Scalar::from_long(q, 9));
  CHECK((*x)[1] == Scalar::from_long(q, -36));
  CHECK((*x)[2] == Scalar::from_long(q, 30));
}

TEST_CASE("rowspace membership over F5") {
  Field f5 = Field::prime(5);
  Matrix m = from_rows(f5, {{1, 2, 0}, {0, 0, 1}});
  RowSpace rs(m);
  CHECK(rs.dimension() == 2);
  CHECK(rs.contains(vec(f5, {2, 4, 3})));
  CHECK(!rs.contains(vec(f5, {0, 1, 0})));
  CHECK_THROWS_AS(rs.contains(vec(f5, {1, 2})), Error);
}

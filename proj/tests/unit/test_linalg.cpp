// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

using namespace lathom;

namespace {

Mat random_matrix(const Field& f, std::mt19937_64& rng, std::size_t max_dim = 6) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-4, 4);
  Mat m(f, dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, f.from_long(entry(rng)));
  return m;
}

}  // namespace

TEST_CASE("field parsing and arithmetic") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("fp:2") == Field::prime(2));
  CHECK(Field::parse("fp:7").characteristic() == 7);
  CHECK(Field::rationals().name() == "q");
  CHECK(Field::prime(3).name() == "fp:3");
  CHECK_THROWS_AS(Field::parse("fp:4"), SemanticError);   // composite
  CHECK_THROWS_AS(Field::parse("fp:1"), SemanticError);
  CHECK_THROWS_AS(Field::parse("fp:0"), SemanticError);
  CHECK_THROWS_AS(Field::parse("r"), SemanticError);
  CHECK_THROWS_AS(Field::parse(""), SemanticError);

  Field q = Field::rationals();
  // exact rational arithmetic, no rounding
  Scalar half = q.div(q.one(), q.from_long(2));
  Scalar third = q.div(q.one(), q.from_long(3));
  CHECK(q.to_string(q.add(half, third)) == "5/6");
  CHECK(q.is_zero(q.sub(half, half)));

  for (std::uint64_t p : {2ull, 3ull, 7ull, 101ull}) {
    Field f = Field::prime(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      Scalar s = f.from_long(static_cast<long>(a));
      CHECK(f.eq(f.mul(s, f.inv(s)), f.one()));
    }
    // canonical representatives: -1 reduces to p - 1
    CHECK(f.eq(f.from_long(-1), f.from_long(static_cast<long>(p) - 1)));
    CHECK(f.is_zero(f.from_long(static_cast<long>(p))));
    CHECK_THROWS_AS(f.inv(f.zero()), InternalError);
  }
}

TEST_CASE("matrix basics") {
  Field q = Field::rationals();
  Mat a(q, 2, 3);
  a.set(0, 0, q.from_long(1));
  a.set(0, 2, q.from_long(2));
  a.set(1, 1, q.from_long(-1));

  Mat t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.at(2, 0) == q.from_long(2));
  CHECK(t.transpose() == a);

  Mat id = Mat::identity(q, 3);
  CHECK(a * id == a);
  CHECK(Mat::identity(q, 2) * a == a);
  CHECK_THROWS_AS(a * a, InternalError);  // 2x3 times 2x3

  Mat sum = a + a;
  CHECK(sum.at(0, 2) == q.from_long(4));
  CHECK(!a.is_zero());
  CHECK(Mat(q, 3, 2).is_zero());

  Mat aug = a.augment(a);
  CHECK(aug.cols() == 6);
  CHECK(aug.columns(3, 3) == a);
  CHECK(aug.columns(0, 3) == a);
}

TEST_CASE("rref on pinned examples") {
  Field q = Field::rationals();
  // rank-1: second row is twice the first
  Mat m(q, 2, 2);
  m.set(0, 0, q.from_long(1));
  m.set(0, 1, q.from_long(2));
  m.set(1, 0, q.from_long(2));
  m.set(1, 1, q.from_long(4));
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.reduced.at(0, 1) == q.from_long(2));
  CHECK(r.reduced.at(1, 0) == q.zero());
  CHECK(r.reduced.at(1, 1) == q.zero());

  CHECK(rank(Mat::identity(q, 4)) == 4);
  CHECK(rank(Mat(q, 3, 5)) == 0);

  // over F2 the same matrix entries collapse: [[1,0],[0,0]] has rank 1
  Field f2 = Field::prime(2);
  Mat m2(f2, 2, 2);
  m2.set(0, 0, f2.one());
  m2.set(0, 1, f2.from_long(2));  // 0 mod 2
  m2.set(1, 0, f2.from_long(2));
  m2.set(1, 1, f2.from_long(4));
  CHECK(rank(m2) == 1);
}

TEST_CASE("rank-nullity, kernel and solve properties") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 200; ++trial) {
      Mat m = random_matrix(f, rng);
      RrefResult r = rref(m);
      Mat k = kernel_basis(m);

      // rank-nullity
      CHECK(r.rank + k.cols() == m.cols());
      // kernel columns really are killed
      if (k.cols() > 0) CHECK((m * k).is_zero());
      // kernel basis is independent
      CHECK(rank(k) == k.cols());
      // rref is idempotent and rank is transpose-invariant
      CHECK(rref(r.reduced).reduced == r.reduced);
      CHECK(rank(m.transpose()) == r.rank);

      // a solvable system: b = m * x0 must have a solution that works
      std::uniform_int_distribution<long> entry(-3, 3);
      Mat x0(f, m.cols(), 2);
      for (std::size_t i = 0; i < x0.rows(); ++i)
        for (std::size_t j = 0; j < 2; ++j) x0.set(i, j, f.from_long(entry(rng)));
      Mat b = m * x0;
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }

    // an inconsistent system has no solution
    Mat m(f, 2, 1);
    m.set(0, 0, f.one());
    Mat b(f, 2, 1);
    b.set(1, 0, f.one());
    CHECK(!solve(m, b).has_value());
  }
}

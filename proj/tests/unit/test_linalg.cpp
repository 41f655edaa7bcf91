#include <doctest.h>

#include "../support/helpers.hpp"
#include "uinv/random.hpp"

using namespace uinv;
using namespace testing_support;

TEST_CASE("index_prime") {
  CHECK(index_prime(3, 5) == 3);
  CHECK(index_prime(1, 5) == 5);
  CHECK(index_prime(2, 4) == 3);
  CHECK_THROWS_AS(index_prime(0, 4), PreconditionError);
  CHECK_THROWS_AS(index_prime(5, 4), PreconditionError);
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) CHECK(index_prime(index_prime(i, n), n) == i);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == q(-2));
  for (int n = 0; n <= 6; ++n) CHECK(determinant(ScalarMatrix::identity(n, kQ)).is_one());
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == q(-1));
  CHECK(determinant(mat({{1, 2}, {2, 4}})).is_zero());
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(determinant(mat({{1, 2}, {3, 4}}, f7)).residue() == 5);
}

TEST_CASE("determinant matches the cofactor oracle") {
  Rng rng(2024);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      ScalarMatrix a = rng.matrix(n, kQ);
      // Mix in fractions so the Bareiss row scaling is exercised.
      for (int i = 1; i <= n; ++i) a(i, 1) /= q(rng.uniform(1, 6));
      CHECK(determinant(a).rational() == oracle::laplace_det(to_q(a)));
      CHECK(cofactor_determinant(a).rational() == oracle::laplace_det(to_q(a)));
    }
  }
  // Sparse matrices force row swaps.
  ScalarMatrix s = mat({{0, 0, 1, 2}, {0, 3, 0, 0}, {4, 0, 0, 1}, {0, 0, 5, 0}});
  CHECK(determinant(s).rational() == oracle::laplace_det(to_q(s)));
}

TEST_CASE("determinant: transpose and multiplicativity") {
  for (const FieldSpec& f : {kQ, FieldSpec::prime(kCertificatePrime)}) {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      ScalarMatrix a = rng.matrix(4, f), b = rng.matrix(4, f);
      CHECK(determinant(a) == determinant(a.transpose()));
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
  }
}

TEST_CASE("prime-field determinant agrees with reduction of the rational one") {
  const FieldSpec fp = FieldSpec::prime(1000003);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    ScalarMatrix a = rng.matrix(5, kQ, 1000);
    ScalarMatrix ap(5, fp);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) ap(i, j) = a(i, j).reduce_mod(fp);
    CHECK(determinant(a).reduce_mod(fp) == determinant(ap));
  }
}

TEST_CASE("dual determinant: derivative equals cofactor, with and without pivots") {
  // d/dx det(A) along entry (r,c) is the (r,c) cofactor.
  Rng rng(11);
  for (int n = 1; n <= 5; ++n) {
    ScalarMatrix a = rng.matrix(n, kQ);
    if (n >= 3) {
      // Zero first column except the seeded entry: the elimination has no
      // invertible pivot and must fall back to cofactor expansion.
      for (int i = 1; i <= n; ++i) a(i, 1) = Scalar::zero(kQ);
    }
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        DualMatrix d(n, kQ);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) d(i, j) = dual_lift(a(i, j), (i == r && j == c) ? q(1) : q(0));
        DualScalar det = determinant(d);
        CHECK(det.std_part().rational() == oracle::laplace_det(to_q(a)));
        auto rows = oracle::range(1, n), cols = oracle::range(1, n);
        rows.erase(rows.begin() + (r - 1));
        cols.erase(cols.begin() + (c - 1));
        mpq_class cof = oracle::laplace_det(oracle::pick(to_q(a), rows, cols));
        if ((r + c) % 2) cof = -cof;
        CHECK(det.inf_part().rational() == cof);
        CHECK(cofactor_determinant(d) == det);
      }
  }
}

TEST_CASE("minor examples at n = 5") {
  Rng rng(3);
  const ScalarMatrix x = rng.matrix(5, kQ);
  const auto xq = to_q(x);
  auto e = [&](int i, int j) { return xq[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };

  CHECK(minor_M(x, 5, 3).rational() == e(5, 3));
  CHECK(minor_M(x, 4, 5).rational() == e(4, 1) * e(5, 5) - e(4, 5) * e(5, 1));
  CHECK(minor_M(x, 3, 4).rational() == oracle::laplace_det(oracle::pick(xq, {3, 4, 5}, {1, 2, 4})));
  CHECK(minor_N(x, 3, 5).rational() == e(3, 1));
  CHECK(minor_N(x, 1, 4).rational() == e(1, 1) * e(5, 2) - e(1, 2) * e(5, 1));
  CHECK(minor_N(x, 2, 3).rational() == oracle::laplace_det(oracle::pick(xq, {2, 4, 5}, {1, 2, 3})));

  CHECK_THROWS_AS(minor_M(x, 2, 3), PreconditionError);  // 2' = 4 > 3
  CHECK_THROWS_AS(minor_N(x, 4, 3), PreconditionError);
}

TEST_CASE("minor and corner examples at small n") {
  const ScalarMatrix x = mat({{1, 2}, {3, 4}});
  CHECK(minor_M(x, 2, 1) == q(3));
  CHECK(minor_M(x, 2, 2) == q(4));
  CHECK(minor_N(x, 1, 2) == q(1));
  CHECK(corner_D(x, 2) == q(3));
  CHECK(corner_D(x, 1) == q(-2));
  CHECK(corner_D(x, 3).is_one());
  CHECK_THROWS_AS(corner_D(x, 0), PreconditionError);
  CHECK_THROWS_AS(corner_D(x, 4), PreconditionError);

  Rng rng(4);
  const ScalarMatrix y = rng.matrix(3, kQ);
  const auto yq = to_q(y);
  CHECK(corner_D(y, 3).rational() == yq[2][0]);
  CHECK(corner_D(y, 2).rational() == yq[1][0] * yq[2][1] - yq[1][1] * yq[2][0]);
  CHECK(corner_D(y, 1) == determinant(y));
}

TEST_CASE("corner minor coincides with M_{k,k'} and N_{k,k}") {
  Rng rng(6);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      ScalarMatrix x = rng.matrix(n, kQ);
      for (int k = 1; k <= n; ++k) {
        CHECK(corner_D(x, k) == minor_M(x, k, index_prime(k, n)));
        CHECK(corner_D(x, k) == minor_N(x, k, k));
        CHECK(corner_D(x, k).rational() ==
              oracle::laplace_det(oracle::pick(to_q(x), oracle::range(k, n), oracle::range(1, n + 1 - k))));
      }
    }
}

TEST_CASE("solve_square and rank") {
  ScalarMatrix a = mat({{2, 1}, {1, 3}});
  auto x = solve_square(a, {q(3), q(5)});
  CHECK(x[0] == q(4, 5));
  CHECK(x[1] == q(7, 5));
  CHECK_THROWS_AS(solve_square(mat({{1, 2}, {2, 4}}), {q(1), q(1)}), DomainError);

  CHECK(rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
  CHECK(rank({{q(0), q(1), q(0)}, {q(1), q(0), q(0)}}) == 2);
  CHECK(rank({}) == 0);
}

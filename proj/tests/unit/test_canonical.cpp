#include <doctest.h>

#include "../support/helpers.hpp"
#include "uinv/canonical.hpp"
#include "uinv/certify.hpp"

using namespace uinv;
using namespace testing_support;

TEST_CASE("section shape") {
  CHECK(is_section_shape(ScalarMatrix(4, kQ)));
  CHECK_FALSE(is_section_shape(ScalarMatrix::identity(2, kQ)));
  CHECK(is_section_shape(ScalarMatrix::identity(1, kQ)));
  CHECK(is_section_shape(mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})));
  CHECK(is_section_shape(mat({{0, 0, 1}, {0, 2, 3}, {4, 5, 6}})));
  CHECK_FALSE(is_section_shape(mat({{0, 0, 1}, {1, 2, 3}, {4, 5, 6}})));
}

TEST_CASE("bring_to_section: 2x2 example") {
  SectionResult r = bring_to_section(MatrixTuple({mat({{1, 2}, {3, 4}})}));
  CHECK(r.u(1, 2) == q(-1, 3));
  ScalarMatrix expected(2, kQ);
  expected(1, 1) = q(0);
  expected(1, 2) = q(2, 3);
  expected(2, 1) = q(3);
  expected(2, 2) = q(5);
  CHECK(r.section[1] == expected);
  InvariantVector inv = evaluate_invariants(r.section);
  CHECK(inv.values == std::vector<Scalar>{q(-2), q(3), q(15)});
}

TEST_CASE("bring_to_section: a section tuple is its own canonical form") {
  MatrixTuple t({mat({{0, 0, 2}, {0, 1, 3}, {4, 5, 6}}), mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})});
  SectionResult r = bring_to_section(t);
  CHECK(r.u.is_identity());
  CHECK(r.section == t);
}

TEST_CASE("bring_to_section: non-generic input") {
  MatrixTuple t({mat({{1, 2, 3}, {4, 5, 6}, {0, 8, 9}})});  // D_3 = x_31 = 0
  try {
    bring_to_section(t);
    FAIL("expected GenericityError");
  } catch (const GenericityError& e) {
    CHECK_FALSE(e.report().generic());
    CHECK(e.report().flags == std::vector<bool>{true, false});
  }
  // D_2 = 0 with D_3 != 0.
  MatrixTuple t2({mat({{1, 2, 3}, {1, 2, 6}, {2, 4, 9}})});
  CHECK_THROWS_AS(bring_to_section(t2), GenericityError);
  // D_1 = det may vanish.
  MatrixTuple t3({mat({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})});
  CHECK(is_section_shape(bring_to_section(t3).section[1]));
}

TEST_CASE("bring_to_section is canonical and preserves invariants") {
  for (const FieldSpec& f : {kQ, FieldSpec::prime(kCertificatePrime)}) {
    Rng rng(41);
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 3; ++m) {
        MatrixTuple t = random_generic_tuple(n, m, f, rng);
        UnitriangularMatrix g = random_unitriangular(n, f, rng);
        SectionResult a = bring_to_section(t);
        SectionResult b = bring_to_section(adjoint_tuple(g, t));
        CHECK(is_section_shape(a.section[1]));
        CHECK(a.section == b.section);
        CHECK(adjoint_tuple(a.u, t) == a.section);
        CHECK(evaluate_invariants(a.section) == evaluate_invariants(t));
        // Uniqueness: b.u * g = a.u.
        CHECK(b.u * g == a.u);
      }
  }
}

TEST_CASE("anti-triangular sign tables") {
  CHECK(anti_triangular_signs(2).epsilon(2) == 1);
  CHECK(anti_triangular_signs(2).epsilon(1) == -1);
  for (int n = 1; n <= 6; ++n) CHECK(anti_triangular_signs(n).epsilon(n) == 1);

  // Validate every entry against symbolic determinants of a generic section.
  for (int n = 1; n <= 6; ++n) {
    const AntiTriangularSigns sg = anti_triangular_signs(n);
    const oracle::PMatrix s = oracle::symbolic_section(n);
    std::vector<oracle::Poly> d(static_cast<std::size_t>(n) + 2, oracle::Poly::constant(1));
    for (int k = 1; k <= n; ++k) {
      d[static_cast<std::size_t>(k)] = oracle::laplace_det(oracle::pick(s, oracle::range(k, n), oracle::range(1, n + 1 - k)));
      oracle::Poly prod = oracle::Poly::constant(1);
      for (int r = k; r <= n; ++r) prod = prod * oracle::Poly::var(r * 100 + (n + 1 - r));
      CAPTURE(n);
      CAPTURE(k);
      CHECK(oracle::sign_relation(d[static_cast<std::size_t>(k)], prod) == sg.epsilon(k));
    }
    for (auto [i, k] : ordered_pairs(n)) {
      auto cols = oracle::range(1, n - i);
      cols.push_back(k);
      oracle::Poly m_ik = oracle::laplace_det(oracle::pick(s, oracle::range(i, n), cols));
      oracle::Poly rhs = d[static_cast<std::size_t>(i) + 1] * oracle::Poly::var(i * 100 + k);
      CAPTURE(n);
      CAPTURE(i);
      CAPTURE(k);
      CHECK(oracle::sign_relation(m_ik, rhs) == sg.eta_of(i, k));
    }
  }
}

TEST_CASE("reconstruct_section_single") {
  InvariantVector inv{enumerate_generators(2, 1), {q(-2), q(3), q(15)}};
  ScalarMatrix s = reconstruct_section_single(inv, 2);
  CHECK(s == bring_to_section(MatrixTuple({mat({{1, 2}, {3, 4}})})).section[1]);

  ScalarMatrix sec = mat({{0, 0, 2}, {0, -1, 3}, {4, 5, 6}});
  CHECK(reconstruct_section_single(evaluate_invariants(MatrixTuple({sec})), 3) == sec);

  InvariantVector bad{enumerate_generators(2, 1), {q(-2), q(0), q(15)}};
  CHECK_THROWS_AS(reconstruct_section_single(bad, 2), PreconditionError);
  CHECK_THROWS_AS(reconstruct_section_single(inv, 3), PreconditionError);

  Rng rng(42);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      MatrixTuple t = random_generic_tuple(n, 1, kQ, rng);
      CHECK(reconstruct_section_single(evaluate_invariants(t), n) == bring_to_section(t).section[1]);
    }
}

namespace {

std::map<std::pair<int, int>, Scalar> cross_values(const ScalarMatrix& s, const ScalarMatrix& y) {
  std::map<std::pair<int, int>, Scalar> p;
  for (auto [i, k] : ordered_pairs(s.n())) p.emplace(std::pair{i, k}, p_pair(s, y, i, k));
  return p;
}

std::vector<Scalar> corners(const ScalarMatrix& y) {
  std::vector<Scalar> d;
  for (int k = 1; k <= y.n(); ++k) d.push_back(corner_D(y, k));
  return d;
}

}  // namespace

TEST_CASE("recover_cross_minors") {
  Rng rng(43);
  SUBCASE("n = 2 one-step back substitution") {
    MatrixTuple st = random_generic_section_tuple(2, 2, kQ, rng);
    const ScalarMatrix& s = st[1];
    const ScalarMatrix& y = st[2];
    const Scalar nu12 = (p_pair(s, y, 2, 2) - minor_M(s, 2, 2) * corner_D(y, 2)) / minor_M(s, 2, 1);
    CHECK(nu12 == y(1, 1));
    CHECK(recover_cross_minors(s, corners(y), cross_values(s, y))(1, 2) == nu12);
  }
  SUBCASE("matches direct minors") {
    for (int n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        MatrixTuple st = random_generic_section_tuple(n, 2, kQ, rng);
        CrossMinorTable nu = recover_cross_minors(st[1], corners(st[2]), cross_values(st[1], st[2]));
        for (int k = 1; k <= n; ++k)
          for (int j = 1; j <= k; ++j) CHECK(nu(j, k) == minor_N(st[2], j, k));
      }
  }
  SUBCASE("homogeneous data gives zero") {
    MatrixTuple st = random_generic_section_tuple(4, 1, kQ, rng);
    std::map<std::pair<int, int>, Scalar> zero;
    for (auto ik : ordered_pairs(4)) zero.emplace(ik, q(0));
    CrossMinorTable nu = recover_cross_minors(st[1], std::vector<Scalar>(4, q(0)), zero);
    CHECK(nu == ScalarMatrix(4, kQ));
  }
  SUBCASE("vanishing corner minor") {
    ScalarMatrix s = mat({{0, 0, 1}, {0, 0, 1}, {1, 1, 1}});  // D_2(S) = 0
    std::map<std::pair<int, int>, Scalar> p;
    for (auto ik : ordered_pairs(3)) p.emplace(ik, q(1));
    CHECK_THROWS_AS(recover_cross_minors(s, {q(1), q(1), q(1)}, p), PreconditionError);
  }
}

TEST_CASE("find_conjugator") {
  Rng rng(44);
  MatrixTuple t = random_generic_tuple(4, 2, kQ, rng);
  auto self = find_conjugator(t, t);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  for (const FieldSpec& f : {kQ, FieldSpec::prime(kCertificatePrime)}) {
    for (int n = 1; n <= 5; ++n) {
      MatrixTuple x = random_generic_tuple(n, 2, f, rng);
      UnitriangularMatrix u0 = random_unitriangular(n, f, rng);
      auto u = find_conjugator(x, adjoint_tuple(u0, x));
      REQUIRE(u.has_value());
      CHECK(*u == u0);
    }
  }

  MatrixTuple zero({ScalarMatrix(3, kQ)});
  MatrixTuple other({mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})});
  CHECK_FALSE(find_conjugator(zero, other).has_value());
  CHECK_THROWS_AS(find_conjugator(zero, MatrixTuple({ScalarMatrix(2, kQ)})), PreconditionError);
}

TEST_CASE("compare_orbits") {
  Rng rng(45);
  MatrixTuple t = random_generic_tuple(3, 2, kQ, rng);
  OrbitComparison same = compare_orbits(t, adjoint_tuple(random_unitriangular(3, kQ, rng), t));
  CHECK(same.invariants_equal);
  CHECK(same.conjugator.has_value());
  OrbitComparison diff = compare_orbits(t, rng.tuple(3, 2, kQ));
  CHECK_FALSE(diff.invariants_equal);
  CHECK_FALSE(diff.conjugator.has_value());
  // Non-generic: the zero tuple and a nilpotent Jordan block share all-zero
  // D values but are not conjugate; equal invariants stay undecided.
  MatrixTuple z({ScalarMatrix(2, kQ)});
  MatrixTuple nil({mat({{0, 1}, {0, 0}})});
  OrbitComparison und = compare_orbits(z, nil);
  CHECK(und.invariants_equal);
  CHECK_FALSE(und.conjugator.has_value());
}

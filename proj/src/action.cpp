#include "uinv/action.hpp"

namespace uinv {

Scalar Rng::scalar(const FieldSpec& field, long bound) {
  if (field.is_prime()) return Scalar::from_residue(field, next() % field.p);
  return Scalar(field, uniform(-bound, bound));
}

Matrix<Scalar> Rng::matrix(int n, const FieldSpec& field, long bound) {
  ScalarMatrix x(n, field);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) x(i, j) = scalar(field, bound);
  return x;
}

MatrixTuple Rng::tuple(int n, int m, const FieldSpec& field, long bound) {
  std::vector<ScalarMatrix> comps;
  for (int ell = 0; ell < m; ++ell) comps.push_back(matrix(n, field, bound));
  return MatrixTuple(std::move(comps));
}

UnitriangularMatrix::UnitriangularMatrix(ScalarMatrix m) : m_(std::move(m)) {
  for (int i = 1; i <= m_.n(); ++i) {
    if (!m_(i, i).is_one()) throw PreconditionError("unitriangular matrix needs a unit diagonal");
    for (int j = 1; j < i; ++j)
      if (!m_(i, j).is_zero()) throw PreconditionError("unitriangular matrix must vanish below the diagonal");
  }
}

void UnitriangularMatrix::set(int a, int b, const Scalar& v) {
  if (a >= b) throw PreconditionError("only strictly-upper entries of a unitriangular matrix are free");
  m_(a, b) = v;
}

UnitriangularMatrix elementary_unipotent(int a, const Scalar& t, int n) {
  if (a < 1 || a > n - 1) throw PreconditionError("simple root index a=" + std::to_string(a) + " out of range");
  UnitriangularMatrix u(n, t.field());
  u.set(a, a + 1, t);
  return u;
}

UnitriangularMatrix random_unitriangular(int n, const FieldSpec& field, Rng& rng, long bound) {
  UnitriangularMatrix u(n, field);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) u.set(a, b, rng.scalar(field, bound));
  return u;
}

UnitriangularMatrix random_unitriangular(int n, const FieldSpec& field, std::uint64_t seed, long bound) {
  Rng rng(seed);
  return random_unitriangular(n, field, rng, bound);
}

UnitriangularMatrix group_inverse(const UnitriangularMatrix& u) {
  const int n = u.n();
  UnitriangularMatrix v(n, u.field());
  // Column by column: v_ab = -sum_{a<c<=b} u_ac v_cb.
  for (int b = 1; b <= n; ++b)
    for (int a = b - 1; a >= 1; --a) {
      Scalar acc = u(a, b);
      for (int c = a + 1; c < b; ++c) acc += u(a, c) * v(c, b);
      v.set(a, b, -acc);
    }
  return v;
}

MatrixTuple adjoint_tuple(const UnitriangularMatrix& u, const MatrixTuple& t) {
  if (u.n() != t.n()) throw PreconditionError("dimension mismatch between group element and tuple");
  if (!(u.field() == t.field())) throw DomainError("field mismatch between group element and tuple");
  const ScalarMatrix& g = u.matrix();
  const ScalarMatrix gi = group_inverse(u).matrix();
  std::vector<ScalarMatrix> out;
  for (const auto& x : t.components()) out.push_back(g * x * gi);
  return MatrixTuple(std::move(out));
}

bool ActionReport::all_passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return true;
}

std::string ActionReport::first_failure() const {
  for (const auto& c : cases) {
    if (!c.passed) {
      return std::string(1, c.family) + "_{" + std::to_string(c.first) + "," + std::to_string(c.second) +
             "} a=" + std::to_string(a);
    }
  }
  return {};
}

ActionReport check_elementary_action(const ScalarMatrix& x, const ScalarMatrix& y, int a, const Scalar& t,
                                     ActionConvention convention) {
  const int n = x.n();
  const UnitriangularMatrix s = elementary_unipotent(a, t, n);
  const ScalarMatrix si = group_inverse(s).matrix();
  const ScalarMatrix& sm = s.matrix();
  auto act = [&](const ScalarMatrix& z) {
    return convention == ActionConvention::InverseLeft ? si * z * sm : sm * z * si;
  };
  const ScalarMatrix xs = act(x), ys = act(y);

  ActionReport report;
  report.a = a;
  for (int i = 1; i <= n; ++i) {
    const int ip = index_prime(i, n);
    for (int j = ip; j <= n; ++j) {
      Scalar expected = (ip < j && j == a + 1) ? minor_M(x, i, a + 1) + t * minor_M(x, i, a) : minor_M(x, i, j);
      report.cases.push_back({'M', i, j, minor_M(xs, i, j) == expected});
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      Scalar expected = (j == a && a < k) ? minor_N(y, a, k) - t * minor_N(y, a + 1, k) : minor_N(y, j, k);
      report.cases.push_back({'N', j, k, minor_N(ys, j, k) == expected});
    }
  }
  return report;
}

}  // namespace uinv

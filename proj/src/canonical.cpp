#include "uinv/canonical.hpp"

#include <sstream>

namespace uinv {

bool GenericityReport::generic() const {
  for (bool f : flags)
    if (!f) return false;
  return true;
}

std::string GenericityReport::to_string() const {
  std::ostringstream os;
  os << "GENERIC " << (generic() ? "yes" : "no");
  for (std::size_t i = 0; i < flags.size(); ++i) os << "\nD[" << i + 2 << "] " << (flags[i] ? "nonzero" : "zero");
  return os.str();
}

GenericityError::GenericityError(GenericityReport report)
    : PreconditionError("tuple is not generic: some corner minor D_k(X_1), k >= 2, vanishes"),
      report_(std::move(report)) {}

bool is_section_shape(const ScalarMatrix& x) {
  const int n = x.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      if (!x(i, j).is_zero()) return false;
  return true;
}

GenericityReport genericity(const ScalarMatrix& x1) {
  GenericityReport r;
  for (int k = 2; k <= x1.n(); ++k) r.flags.push_back(!corner_D(x1, k).is_zero());
  return r;
}

SectionResult bring_to_section(const MatrixTuple& t) {
  const ScalarMatrix& x = t[1];
  const int n = x.n();
  GenericityReport rep = genericity(x);
  if (!rep.generic()) throw GenericityError(std::move(rep));

  UnitriangularMatrix u(n, x.field());
  for (int i = n - 1; i >= 1; --i) {
    const int size = n - i;
    // Unknowns u_{i,i+1..n}; equation c: sum_r u_ir X[r,c] = -X[i,c].
    ScalarMatrix a(size, x.field());
    std::vector<Scalar> b;
    for (int c = 1; c <= size; ++c) {
      for (int r = i + 1; r <= n; ++r) a(c, r - i) = x(r, c);
      b.push_back(-x(i, c));
    }
    auto sol = solve_square(a, std::move(b));
    for (int r = i + 1; r <= n; ++r) u.set(i, r, sol[static_cast<std::size_t>(r - i - 1)]);
  }
  MatrixTuple s = adjoint_tuple(u, t);
  return {std::move(u), std::move(s)};
}

AntiTriangularSigns anti_triangular_signs(int n) {
  AntiTriangularSigns s;
  s.n = n;
  // D_k(S) is anti-triangular of order k'; the reversal permutation of
  // r elements has sign (-1)^{r(r-1)/2}.
  for (int k = 1; k <= n + 1; ++k) {
    const int r = n + 1 - k;
    s.eps.push_back((r * (r - 1) / 2) % 2 == 0 ? 1 : -1);
  }
  // Row i of M_ik(S) is zero except its last entry s_ik at column i'.
  for (auto [i, k] : ordered_pairs(n)) {
    const int ip = n + 1 - i;
    s.eta[{i, k}] = (ip + 1) % 2 == 0 ? 1 : -1;
  }
  return s;
}

ScalarMatrix reconstruct_section_single(const InvariantVector& inv, int n) {
  if (inv.labels != enumerate_generators(n, 1)) {
    throw PreconditionError("invariant vector does not match the single-matrix generator layout for n=" +
                            std::to_string(n));
  }
  const FieldSpec field = inv.values.empty() ? FieldSpec{} : inv.values.front().field();
  std::vector<Scalar> d(static_cast<std::size_t>(n) + 2, Scalar::one(field));  // d[k], d[n+1] = 1
  std::map<std::pair<int, int>, Scalar> p;
  for (std::size_t r = 0; r < inv.labels.size(); ++r) {
    const auto& l = inv.labels[r];
    if (l.family == Family::D) d[static_cast<std::size_t>(l.k)] = inv.values[r];
    else p.emplace(std::pair{l.i, l.k}, inv.values[r]);
  }
  for (int k = 2; k <= n; ++k) {
    if (d[static_cast<std::size_t>(k)].is_zero()) {
      throw PreconditionError("non-generic invariant vector: D_" + std::to_string(k) + " = 0");
    }
  }

  const AntiTriangularSigns sg = anti_triangular_signs(n);
  ScalarMatrix s(n, field);
  for (int k = 1; k <= n; ++k) {
    Scalar sign(field, static_cast<long>(sg.epsilon(k) * sg.epsilon(k + 1)));
    s(k, n + 1 - k) = sign * d[static_cast<std::size_t>(k)] / d[static_cast<std::size_t>(k) + 1];
  }
  for (auto [i, k] : ordered_pairs(n)) {
    Scalar denom = Scalar(field, static_cast<long>(sg.eta_of(i, k))) * d[static_cast<std::size_t>(i) + 1] *
                   d[static_cast<std::size_t>(k)];
    s(i, k) = p.at({i, k}) / denom;
  }
  return s;
}

CrossMinorTable recover_cross_minors(const ScalarMatrix& s, const std::vector<Scalar>& d_y,
                                     const std::map<std::pair<int, int>, Scalar>& p_xy) {
  const int n = s.n();
  if (static_cast<int>(d_y.size()) != n) throw PreconditionError("need D_k(Y) for every k in [1, n]");
  MinorTable<Scalar> ms(s);
  for (int i = 2; i <= n; ++i) {
    if (ms.D(i).is_zero()) throw PreconditionError("D_" + std::to_string(i) + "(S) vanishes");
  }
  CrossMinorTable nu(n, s.field());
  for (int k = 1; k <= n; ++k) {
    nu(k, k) = d_y[static_cast<std::size_t>(k - 1)];
    // Equation for i with i' = j solves for nu_{jk}; leading coefficient
    // M_{i,i'}(S) = D_i(S).
    for (int j = k - 1; j >= 1; --j) {
      const int i = n + 1 - j;
      auto it = p_xy.find({i, k});
      if (it == p_xy.end()) {
        throw PreconditionError("missing P_{" + std::to_string(i) + "," + std::to_string(k) + "}(S,Y)");
      }
      Scalar rest = it->second;
      for (int jj = j + 1; jj <= k; ++jj) rest -= ms.M(i, jj) * nu(jj, k);
      nu(j, k) = rest / ms.M(i, j);
    }
  }
  return nu;
}

std::optional<UnitriangularMatrix> find_conjugator(const MatrixTuple& t, const MatrixTuple& t2) {
  if (t.n() != t2.n() || t.m() != t2.m() || !(t.field() == t2.field())) {
    throw PreconditionError("find_conjugator needs tuples of equal n, m and field");
  }
  const int n = t.n();
  const FieldSpec& field = t.field();
  // Unknown index for u_ab, a < b.
  std::map<std::pair<int, int>, int> var;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) var.emplace(std::pair{a, b}, static_cast<int>(var.size()));
  const std::size_t nv = var.size();

  // (u X - X2 u)_{rc} = sum_b u_rb X_bc - sum_a X2_ra u_ac = 0, u_rr = 1.
  std::vector<std::vector<Scalar>> rows;  // augmented [coeffs | rhs]
  for (int ell = 1; ell <= t.m(); ++ell) {
    const ScalarMatrix& x = t[ell];
    const ScalarMatrix& x2 = t2[ell];
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        std::vector<Scalar> row(nv + 1, Scalar::zero(field));
        Scalar constant = x(r, c) - x2(r, c);
        for (int b = r + 1; b <= n; ++b) row[static_cast<std::size_t>(var.at({r, b}))] += x(b, c);
        for (int a = 1; a < c; ++a) row[static_cast<std::size_t>(var.at({a, c}))] -= x2(r, a);
        row[nv] = -constant;
        rows.push_back(std::move(row));
      }
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nv && rank < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Scalar inv = rows[rank][c].inverse();
    for (std::size_t j = c; j <= nv; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j <= nv; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][nv].is_zero()) return std::nullopt;

  std::vector<Scalar> sol(nv, Scalar::zero(field));
  for (std::size_t r = 0; r < rank; ++r) sol[static_cast<std::size_t>(pivot_col[r])] = rows[r][nv];

  UnitriangularMatrix u(n, field);
  for (const auto& [ab, idx] : var) u.set(ab.first, ab.second, sol[static_cast<std::size_t>(idx)]);
  if (!(adjoint_tuple(u, t) == t2)) return std::nullopt;
  return u;
}

OrbitComparison compare_orbits(const MatrixTuple& t, const MatrixTuple& t2) {
  if (t.n() != t2.n() || t.m() != t2.m() || !(t.field() == t2.field())) {
    throw PreconditionError("tuples differ in n, m or field");
  }
  OrbitComparison r;
  r.invariants_equal = evaluate_invariants(t) == evaluate_invariants(t2);
  if (r.invariants_equal) r.conjugator = find_conjugator(t, t2);
  return r;
}

}  // namespace uinv

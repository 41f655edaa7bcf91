#include "uinv/linalg.hpp"

#include <numeric>

namespace uinv {
namespace {

// Scales every row to integers and runs Bareiss over Z.
Scalar bareiss_rational(const ScalarMatrix& a) {
  const int n = a.n();
  std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<std::size_t>(i) * n + j]; };
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i + 1, j + 1).rational().get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = a(i + 1, j + 1).rational();
      at(i, j) = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return Scalar::zero(a.field());
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  mpz_class det = sign * at(n - 1, n - 1);
  return Scalar::from_rational(mpq_class(det, scale));
}

Scalar gauss_prime(ScalarMatrix a) {
  const int n = a.n();
  Scalar det = Scalar::one(a.field());
  for (int k = 1; k <= n; ++k) {
    int piv = 0;
    for (int r = k; r <= n; ++r)
      if (!a(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv == 0) return Scalar::zero(a.field());
    if (piv != k) {
      for (int j = k; j <= n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    Scalar inv = a(k, k).inverse();
    for (int r = k + 1; r <= n; ++r) {
      if (a(r, k).is_zero()) continue;
      Scalar f = a(r, k) * inv;
      for (int j = k + 1; j <= n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace

int index_prime(int i, int n) {
  if (i < 1 || i > n) throw PreconditionError("index " + std::to_string(i) + " out of range [1," + std::to_string(n) + "]");
  return n + 1 - i;
}

Scalar determinant(const ScalarMatrix& a) {
  if (a.n() == 0) return Scalar::one(a.field());
  if (a.field().is_prime()) return gauss_prime(a);
  return bareiss_rational(a);
}

DualScalar determinant(const DualMatrix& in) {
  const int n = in.n();
  if (n == 0) return DualScalar::one(in.field());
  DualMatrix a = in;
  DualScalar det = DualScalar::one(in.field());
  for (int k = 1; k <= n; ++k) {
    int piv = 0;
    for (int r = k; r <= n; ++r)
      if (a(r, k).is_invertible()) {
        piv = r;
        break;
      }
    if (piv == 0) {
      // Column k of the trailing block is purely infinitesimal.
      std::vector<int> idx(static_cast<std::size_t>(n - k + 1));
      std::iota(idx.begin(), idx.end(), k);
      DualMatrix rest = a.submatrix(idx, idx);
      const int r = rest.n();
      DualScalar acc = DualScalar::zero(in.field());
      std::vector<int> rows, cols;
      for (int c = 2; c <= r; ++c) cols.push_back(c);
      for (int row = 1; row <= r; ++row) {
        if (rest(row, 1).is_zero()) continue;
        rows.clear();
        for (int rr = 1; rr <= r; ++rr)
          if (rr != row) rows.push_back(rr);
        DualScalar term = rest(row, 1) * determinant(rest.submatrix(rows, cols));
        if (row % 2 == 0) acc -= term; else acc += term;
      }
      return det * acc;
    }
    if (piv != k) {
      for (int j = k; j <= n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int r = k + 1; r <= n; ++r) {
      if (a(r, k).is_zero()) continue;
      DualScalar f = a(r, k) / a(k, k);
      for (int j = k + 1; j <= n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  return det;
}

std::pair<std::vector<int>, std::vector<int>> minor_M_indices(int n, int i, int j) {
  const int ip = index_prime(i, n);
  if (j < 1 || j > n) throw PreconditionError("column index j=" + std::to_string(j) + " out of range");
  if (ip > j) {
    throw PreconditionError("M_{" + std::to_string(i) + "," + std::to_string(j) + "} requires i' <= j");
  }
  std::vector<int> rows, cols;
  for (int r = i; r <= n; ++r) rows.push_back(r);
  for (int c = 1; c < ip; ++c) cols.push_back(c);
  cols.push_back(j);
  return {rows, cols};
}

std::pair<std::vector<int>, std::vector<int>> minor_N_indices(int n, int j, int k) {
  const int kp = index_prime(k, n);
  if (j < 1 || j > n) throw PreconditionError("row index j=" + std::to_string(j) + " out of range");
  if (j > k) throw PreconditionError("N_{" + std::to_string(j) + "," + std::to_string(k) + "} requires j <= k");
  std::vector<int> rows{j}, cols;
  for (int r = k + 1; r <= n; ++r) rows.push_back(r);
  for (int c = 1; c <= kp; ++c) cols.push_back(c);
  return {rows, cols};
}

std::vector<Scalar> solve_square(const ScalarMatrix& in, std::vector<Scalar> b) {
  const int n = in.n();
  if (static_cast<int>(b.size()) != n) throw PreconditionError("right-hand side length mismatch");
  ScalarMatrix a = in;
  for (int k = 1; k <= n; ++k) {
    int piv = 0;
    for (int r = k; r <= n; ++r)
      if (!a(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv == 0) throw DomainError("singular linear system");
    if (piv != k) {
      for (int j = 1; j <= n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k - 1], b[piv - 1]);
    }
    Scalar inv = a(k, k).inverse();
    for (int r = 1; r <= n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      Scalar f = a(r, k) * inv;
      for (int j = k; j <= n; ++j) a(r, j) -= f * a(k, j);
      b[r - 1] -= f * b[k - 1];
    }
  }
  for (int k = 1; k <= n; ++k) b[k - 1] /= a(k, k);
  return b;
}

int rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    const auto& pr = rows[static_cast<std::size_t>(r)];
    Scalar inv = pr[c].inverse();
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * pr[j];
    }
    ++r;
  }
  return r;
}

}  // namespace uinv

#pragma once

// Dense exact matrices and the minor families M_ij, N_jk, D_k.
//
// All row/column indices at this API are 1-based.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uinv/scalar.hpp"

namespace uinv {

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(int n, const FieldSpec& field) : n_(n), field_(field), data_(static_cast<std::size_t>(n) * n, T::zero(field)) {
    if (n < 0) throw PreconditionError("negative matrix dimension");
  }

  static Matrix identity(int n, const FieldSpec& field) {
    Matrix m(n, field);
    for (int i = 1; i <= n; ++i) m(i, i) = T::one(field);
    return m;
  }

  /// Builds from row-major integer data.
  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
    Matrix m(static_cast<int>(rows.size()), field);
    for (int i = 1; i <= m.n_; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != m.n_) throw PreconditionError("matrix rows must be square");
      for (int j = 1; j <= m.n_; ++j) m(i, j) = T(Scalar(field, rows[i - 1][j - 1]));
    }
    return m;
  }

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }

  T& operator()(int i, int j) { return data_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx(i, j)]; }

  /// Square submatrix on the given 1-based row and column lists, in the
  /// order listed.
  Matrix submatrix(std::span<const int> rows, std::span<const int> cols) const {
    if (rows.size() != cols.size()) throw PreconditionError("submatrix must be square");
    Matrix s(static_cast<int>(rows.size()), field_);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        s(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = (*this)(rows[a], cols[b]);
    return s;
  }

  Matrix transpose() const {
    Matrix t(n_, field_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw PreconditionError("dimension mismatch in matrix product");
    Matrix c(a.n_, a.field_);
    for (int i = 1; i <= a.n_; ++i)
      for (int k = 1; k <= a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 1; j <= a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw PreconditionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" +
                              std::to_string(n_));
    }
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  FieldSpec field_{};
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using DualMatrix = Matrix<DualScalar>;

/// A point of Mat(n)^m: m >= 1 components of common size and field.
template <class T>
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<Matrix<T>> components) : components_(std::move(components)) {
    if (components_.empty()) throw PreconditionError("a matrix tuple needs at least one component");
    for (const auto& c : components_) {
      if (c.n() != components_.front().n() || !(c.field() == components_.front().field())) {
        throw PreconditionError("tuple components must share dimension and field");
      }
    }
  }

  int n() const { return components_.front().n(); }
  int m() const { return static_cast<int>(components_.size()); }
  const FieldSpec& field() const { return components_.front().field(); }

  /// 1-based component access.
  const Matrix<T>& operator[](int ell) const { return components_.at(static_cast<std::size_t>(ell - 1)); }
  Matrix<T>& operator[](int ell) { return components_.at(static_cast<std::size_t>(ell - 1)); }
  const std::vector<Matrix<T>>& components() const { return components_; }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  std::vector<Matrix<T>> components_;
};

using MatrixTuple = Tuple<Scalar>;
using DualTuple = Tuple<DualScalar>;

/// i' = n + 1 - i.
int index_prime(int i, int n);

/// Exact determinant. Fraction-free Bareiss over Q, Gaussian elimination
/// over F_p.
Scalar determinant(const ScalarMatrix& a);

/// Pivots only on entries with invertible standard part; when a column has
/// none, expands that column by cofactors.
DualScalar determinant(const DualMatrix& a);

/// Laplace expansion along the first row. Exponential; for small matrices
/// and as the dual-number fallback.
template <class T>
T cofactor_determinant(const Matrix<T>& a) {
  const int n = a.n();
  if (n == 0) return T::one(a.field());
  if (n == 1) return a(1, 1);
  T acc = T::zero(a.field());
  std::vector<int> rows, cols;
  for (int r = 2; r <= n; ++r) rows.push_back(r);
  for (int c = 1; c <= n; ++c) {
    if (a(1, c).is_zero()) continue;
    cols.clear();
    for (int cc = 1; cc <= n; ++cc)
      if (cc != c) cols.push_back(cc);
    T term = a(1, c) * cofactor_determinant(a.submatrix(rows, cols));
    if (c % 2 == 0) acc -= term; else acc += term;
  }
  return acc;
}

/// Row list [i, n] and column list [1, i'-1] + {j}, ascending.
std::pair<std::vector<int>, std::vector<int>> minor_M_indices(int n, int i, int j);
/// Row list {j} + [k+1, n] (row j first) and column list [1, k'].
std::pair<std::vector<int>, std::vector<int>> minor_N_indices(int n, int j, int k);

/// M_ij(X): order-i' minor on rows [i,n], columns [1,i'-1] and j. Needs i' <= j.
template <class T>
T minor_M(const Matrix<T>& x, int i, int j) {
  auto [rows, cols] = minor_M_indices(x.n(), i, j);
  return determinant(x.submatrix(rows, cols));
}

/// N_jk(Y): order-k' minor on rows {j} and [k+1,n], columns [1,k']. Needs j <= k.
template <class T>
T minor_N(const Matrix<T>& y, int j, int k) {
  auto [rows, cols] = minor_N_indices(y.n(), j, k);
  return determinant(y.submatrix(rows, cols));
}

/// D_k(X): lower-left corner minor on rows [k,n] and columns [1,k'].
/// D_{n+1} = 1.
template <class T>
T corner_D(const Matrix<T>& x, int k) {
  const int n = x.n();
  if (k < 1 || k > n + 1) throw PreconditionError("corner minor index k=" + std::to_string(k) + " out of range");
  if (k == n + 1) return T::one(x.field());
  return minor_M(x, k, index_prime(k, n));
}

/// Solves A x = b for square nonsingular A over a field; nullopt-free: throws
/// DomainError when A is singular.
std::vector<Scalar> solve_square(const ScalarMatrix& a, std::vector<Scalar> b);

/// Rank by elimination.
int rank(std::vector<std::vector<Scalar>> rows);

}  // namespace uinv

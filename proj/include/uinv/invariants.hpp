#pragma once

// The invariants P_ik(X,Y), P_ik(X), D_k(X) and the free generating family
// of the field of U-invariants of Mat(n)^m.

#include <compare>
#include <string>
#include <vector>

#include "uinv/linalg.hpp"

namespace uinv {

enum class Family { D, P, Pcross };

/// Name of one generator. For D only k is used; i is 0.
/// Pcross(ell, (i,k)) stands for P_ik(X_1, X_ell), ell >= 2.
struct GeneratorLabel {
  Family family = Family::D;
  int ell = 1;
  int i = 0;
  int k = 1;

  static GeneratorLabel d(int ell, int k) { return {Family::D, ell, 0, k}; }
  static GeneratorLabel p(int ell, int i, int k) { return {Family::P, ell, i, k}; }
  static GeneratorLabel cross(int ell, int i, int k) { return {Family::Pcross, ell, i, k}; }

  /// "D[ell,k]", "P[ell,(i,k)]" or "PX[1,ell,(i,k)]".
  std::string to_string() const;
  static GeneratorLabel parse(const std::string& text);

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Pairs (i,k) with i' < k, ascending in k and, for equal k, descending in i.
std::vector<std::pair<int, int>> ordered_pairs(int n);

/// Families in order D, P, Pcross; ascending ell; D by k; P and Pcross by
/// ordered_pairs. Size m n^2 - n(n-1)/2.
std::vector<GeneratorLabel> enumerate_generators(int n, int m);

/// Expected |enumerate_generators(n, m)|.
long generator_count(int n, int m);

struct InvariantVector {
  std::vector<GeneratorLabel> labels;
  std::vector<Scalar> values;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// All minors M_ij (i' <= j) and N_jk (j <= k) of one matrix, computed once.
template <class T>
class MinorTable {
 public:
  explicit MinorTable(const Matrix<T>& x) : n_(x.n()), m_(cells(), T::zero(x.field())), nn_(cells(), T::zero(x.field())) {
    for (int i = 1; i <= n_; ++i)
      for (int j = index_prime(i, n_); j <= n_; ++j) m_[at(i, j)] = minor_M(x, i, j);
    for (int k = 1; k <= n_; ++k)
      for (int j = 1; j <= k; ++j) nn_[at(j, k)] = minor_N(x, j, k);
  }

  const T& M(int i, int j) const { return m_[at(i, j)]; }
  const T& N(int j, int k) const { return nn_[at(j, k)]; }
  /// D_k for 1 <= k <= n.
  const T& D(int k) const { return nn_[at(k, k)]; }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a - 1) * n_ + (b - 1); }

  int n_;
  std::vector<T> m_, nn_;
};

namespace detail {
inline void require_below_antidiagonal(int n, int i, int k) {
  if (i < 1 || i > n || k < 1 || k > n || index_prime(i, n) >= k) {
    throw PreconditionError("P_{" + std::to_string(i) + "," + std::to_string(k) + "} requires i' < k");
  }
}
}  // namespace detail

/// sum_{j=i'}^{k} M_ij(X) N_jk(Y) from precomputed tables.
template <class T>
T p_pair(const MinorTable<T>& x, const MinorTable<T>& y, int n, int i, int k, const FieldSpec& field) {
  detail::require_below_antidiagonal(n, i, k);
  T acc = T::zero(field);
  for (int j = index_prime(i, n); j <= k; ++j) acc += x.M(i, j) * y.N(j, k);
  return acc;
}

/// P_ik(X, Y) = sum_{i' <= j <= k} M_ij(X) N_jk(Y), for i' < k.
template <class T>
T p_pair(const Matrix<T>& x, const Matrix<T>& y, int i, int k) {
  if (x.n() != y.n() || !(x.field() == y.field())) throw PreconditionError("P_ik(X,Y) needs X, Y of equal shape and field");
  const int n = x.n();
  detail::require_below_antidiagonal(n, i, k);
  T acc = T::zero(x.field());
  for (int j = index_prime(i, n); j <= k; ++j) acc += minor_M(x, i, j) * minor_N(y, j, k);
  return acc;
}

/// P_ik(X) = P_ik(X, X).
template <class T>
T p_single(const Matrix<T>& x, int i, int k) {
  return p_pair(x, x, i, k);
}

/// Values of every generator of enumerate_generators(n, m), in that order.
template <class T>
std::vector<T> generator_values(const Tuple<T>& t) {
  const int n = t.n(), m = t.m();
  std::vector<MinorTable<T>> tables;
  tables.reserve(static_cast<std::size_t>(m));
  for (int ell = 1; ell <= m; ++ell) tables.emplace_back(t[ell]);
  const auto pairs = ordered_pairs(n);

  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(generator_count(n, m)));
  for (int ell = 1; ell <= m; ++ell)
    for (int k = 1; k <= n; ++k) out.push_back(tables[ell - 1].D(k));
  for (int ell = 1; ell <= m; ++ell)
    for (auto [i, k] : pairs) out.push_back(p_pair(tables[ell - 1], tables[ell - 1], n, i, k, t.field()));
  for (int ell = 2; ell <= m; ++ell)
    for (auto [i, k] : pairs) out.push_back(p_pair(tables[0], tables[ell - 1], n, i, k, t.field()));
  return out;
}

/// Evaluates one generator directly from its definition.
template <class T>
T evaluate_generator(const GeneratorLabel& label, const Tuple<T>& t) {
  switch (label.family) {
    case Family::D: return corner_D(t[label.ell], label.k);
    case Family::P: return p_single(t[label.ell], label.i, label.k);
    case Family::Pcross: return p_pair(t[1], t[label.ell], label.i, label.k);
  }
  throw PreconditionError("unknown generator family");
}

InvariantVector evaluate_invariants(const MatrixTuple& t);

}  // namespace uinv

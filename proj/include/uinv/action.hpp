#pragma once

// The unitriangular group U = UT(n) and its adjoint action on tuples.

#include <cstdint>
#include <string>
#include <vector>

#include "uinv/linalg.hpp"
#include "uinv/random.hpp"

namespace uinv {

/// Upper triangular with unit diagonal. Closed under product and inverse.
class UnitriangularMatrix {
 public:
  UnitriangularMatrix(int n, const FieldSpec& field) : m_(ScalarMatrix::identity(n, field)) {}
  /// Throws PreconditionError unless `m` is upper unitriangular.
  explicit UnitriangularMatrix(ScalarMatrix m);

  int n() const { return m_.n(); }
  const FieldSpec& field() const { return m_.field(); }
  const ScalarMatrix& matrix() const { return m_; }
  /// u_ab, 1-based.
  const Scalar& operator()(int a, int b) const { return m_(a, b); }
  /// Sets u_ab for a < b.
  void set(int a, int b, const Scalar& v);

  bool is_identity() const { return m_ == ScalarMatrix::identity(n(), field()); }

  friend UnitriangularMatrix operator*(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
    return UnitriangularMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const UnitriangularMatrix&, const UnitriangularMatrix&) = default;

 private:
  ScalarMatrix m_;
};

/// I + t E_{a,a+1}.
UnitriangularMatrix elementary_unipotent(int a, const Scalar& t, int n);

/// Strictly-upper entries from Rng::scalar(field, bound), row-major order.
UnitriangularMatrix random_unitriangular(int n, const FieldSpec& field, std::uint64_t seed, long bound = 10);
UnitriangularMatrix random_unitriangular(int n, const FieldSpec& field, Rng& rng, long bound = 10);

/// Exact inverse by back substitution.
UnitriangularMatrix group_inverse(const UnitriangularMatrix& u);

/// (u X_1 u^-1, ..., u X_m u^-1).
MatrixTuple adjoint_tuple(const UnitriangularMatrix& u, const MatrixTuple& t);

/// How a group element g acts on functions: f(g^-1 X g) or f(g X g^-1).
enum class ActionConvention { InverseLeft, Direct };

struct ActionCase {
  char family = 'M';  // 'M' or 'N'
  int first = 0;      // (i,j) for M, (j,k) for N
  int second = 0;
  bool passed = false;
};

struct ActionReport {
  int a = 0;
  std::vector<ActionCase> cases;
  bool all_passed() const;
  /// First failing case, or empty.
  std::string first_failure() const;
};

/// Checks the one-parameter transformation rules of the minors under
/// s(t) = I + t E_{a,a+1}:
///   M_ij -> M_{i,a+1} + t M_{ia}  when i' < j = a+1, else unchanged;
///   N_jk -> N_{ak} - t N_{a+1,k}  when j = a < k,    else unchanged.
/// X and Y are transformed by the chosen convention and every case is
/// compared exactly.
ActionReport check_elementary_action(const ScalarMatrix& x, const ScalarMatrix& y, int a, const Scalar& t,
                                     ActionConvention convention = ActionConvention::InverseLeft);

}  // namespace uinv

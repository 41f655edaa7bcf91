#pragma once

// Canonical representatives of generic U-orbits on Mat(n)^m.
//
// The section consists of tuples (S, X_2, ..., X_m) where S vanishes
// strictly above the anti-diagonal (s_ij = 0 for i + j <= n). A tuple
// whose first component has nonzero corner minors D_2, ..., D_n meets the
// section in exactly one point.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uinv/action.hpp"
#include "uinv/invariants.hpp"

namespace uinv {

struct GenericityReport {
  /// flags[k-2] says whether D_k(X_1) != 0, for k in [2, n].
  std::vector<bool> flags;
  bool generic() const;
  std::string to_string() const;
};

class GenericityError : public PreconditionError {
 public:
  explicit GenericityError(GenericityReport report);
  const GenericityReport& report() const { return report_; }

 private:
  GenericityReport report_;
};

bool is_section_shape(const ScalarMatrix& x);

GenericityReport genericity(const ScalarMatrix& x1);

struct SectionResult {
  UnitriangularMatrix u;
  MatrixTuple section;  // adjoint_tuple(u, T)
};

/// The unique u with u X_1 u^-1 in section shape. Row i of u solves the
/// square system X_1[i,c] + sum_{r>i} u_ir X_1[r,c] = 0, c in [1, n-i],
/// whose determinant is D_{i+1}(X_1).
SectionResult bring_to_section(const MatrixTuple& t);

/// Signs pinned by the library's minor conventions, for section matrices S:
///   D_k(S)  = eps(k) * prod_{r=k}^{n} s_{r,r'}
///   M_ik(S) = eta(i,k) * D_{i+1}(S) * s_ik        (i' < k)
struct AntiTriangularSigns {
  int n = 0;
  std::vector<int> eps;  // eps[k-1], k in [1, n+1]; eps(n+1) = 1
  std::map<std::pair<int, int>, int> eta;

  int epsilon(int k) const { return eps.at(static_cast<std::size_t>(k - 1)); }
  int eta_of(int i, int k) const { return eta.at({i, k}); }
};

AntiTriangularSigns anti_triangular_signs(int n);

/// Rebuilds the section matrix of a single matrix from its invariant vector
/// (labels as produced by enumerate_generators(n, 1)).
ScalarMatrix reconstruct_section_single(const InvariantVector& inv, int n);

/// Table of N_jk(Y) for j <= k (entry (j,k); zeros below the diagonal).
using CrossMinorTable = ScalarMatrix;

/// Back-substitutes P_ik(S, Y) = sum_j M_ij(S) N_jk(Y) for the unknown
/// N_jk(Y), j < k. `d_y[k-1]` = D_k(Y); `p_xy` keyed by (i,k), i' < k.
CrossMinorTable recover_cross_minors(const ScalarMatrix& s, const std::vector<Scalar>& d_y,
                                     const std::map<std::pair<int, int>, Scalar>& p_xy);

/// Some u in U with Ad_u(t) = t2, or nullopt when the linear system
/// u X_l = X2_l u (all l) has no unitriangular solution. Free unknowns are
/// set to zero.
std::optional<UnitriangularMatrix> find_conjugator(const MatrixTuple& t, const MatrixTuple& t2);

/// Equal invariants are necessary for U-equivalence and generically
/// sufficient. A missing conjugator with equal invariants is undecided.
struct OrbitComparison {
  bool invariants_equal = false;
  std::optional<UnitriangularMatrix> conjugator;
};

OrbitComparison compare_orbits(const MatrixTuple& t, const MatrixTuple& t2);

}  // namespace uinv

#pragma once

// Replayable, exact evidence for the invariant-theoretic claims at small n, m.
//
// Every certificate draws all of its randomness from one Rng seeded with
// `seed`, trial after trial, so (parameters, seed) fixes the verdict and the
// witness. Witnesses name the first failing trial in that order.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uinv/action.hpp"
#include "uinv/invariants.hpp"

namespace uinv {

enum class CertificateKind { Invariance, FullRank, SectionSquare, ActionRules, SectionIdentities };

std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::Invariance;
  int n = 0;
  int m = 0;
  FieldSpec field{};
  std::uint64_t seed = 0;
  int samples = 0;  // trials, or points tried for the rank certificates
  bool pass = false;
  std::string witness;
  long achieved_rank = -1;  // rank certificates only
  long expected_rank = -1;

  /// "<kind> n=.. m=.. field=.. seed=.. samples=.. verdict=pass|fail witness=..".
  std::string report_line() const;
};

/// Test-fixture overrides for negative controls. Defaults run the real thing.
struct CertifyHooks {
  std::function<InvariantVector(const MatrixTuple&)> evaluator;  // default evaluate_invariants
  bool identity_group = false;                                   // sample u = I
  bool zero_parameter = false;                                   // sample t = 0
  ActionConvention convention = ActionConvention::InverseLeft;
};

inline constexpr int kDefaultRankRetries = 3;

Certificate certify_invariance(int n, int m, const FieldSpec& field, std::uint64_t seed, int trials,
                               const CertifyHooks& hooks = {});

/// Rank of the |B| x (m n^2) Jacobian of all generators at random points.
/// A full-rank point certifies algebraic independence; a deficient point is
/// inconclusive and is retried with a fresh point.
Certificate certify_full_rank(int n, int m, const FieldSpec& prime_field, std::uint64_t seed,
                              int retries = kDefaultRankRetries);

/// Jacobian of the generators restricted to the section, in the free section
/// coordinates; square of size |B|.
Certificate certify_section_square(int n, int m, const FieldSpec& prime_field, std::uint64_t seed,
                                   int retries = kDefaultRankRetries);

Certificate certify_section_identities(int n, const FieldSpec& field, std::uint64_t seed, int trials);

Certificate certify_action_rules(int n, const FieldSpec& field, std::uint64_t seed, int trials,
                                 const CertifyHooks& hooks = {});

/// Jacobian (rows: generators, columns: the given coordinates (ell, i, j))
/// of the generator map at `point`, by one dual-number pass per column.
std::vector<std::vector<Scalar>> generator_jacobian(const MatrixTuple& point,
                                                    const std::vector<std::array<int, 3>>& coordinates);

/// Section point: first component random in the section pattern, the rest
/// unconstrained. Resampled until D_2..D_n of the first component are nonzero.
MatrixTuple random_generic_section_tuple(int n, int m, const FieldSpec& field, Rng& rng, long bound = 10);

/// Random tuple whose first component is generic.
MatrixTuple random_generic_tuple(int n, int m, const FieldSpec& field, Rng& rng, long bound = 10);

struct SuiteOptions {
  int n = 3;
  int m = 2;
  std::uint64_t p = kCertificatePrime;
  std::uint64_t seed = 1;
  int trials = 20;
};

/// All five certificates: the exact identity checks over Q, the rank
/// certificates over F_p.
std::vector<Certificate> certify_all(const SuiteOptions& opts);

}  // namespace uinv

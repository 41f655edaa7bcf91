#include "uinv/certify.hpp"

#include <sstream>

#include "uinv/canonical.hpp"

namespace uinv {
namespace {

std::vector<std::array<int, 3>> all_coordinates(int n, int m) {
  std::vector<std::array<int, 3>> c;
  for (int ell = 1; ell <= m; ++ell)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) c.push_back({ell, i, j});
  return c;
}

// First component restricted to i + j >= n + 1.
std::vector<std::array<int, 3>> section_coordinates(int n, int m) {
  std::vector<std::array<int, 3>> c;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j >= n + 1) c.push_back({1, i, j});
  for (int ell = 2; ell <= m; ++ell)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) c.push_back({ell, i, j});
  return c;
}

Certificate make(CertificateKind kind, int n, int m, const FieldSpec& f, std::uint64_t seed) {
  Certificate c;
  c.kind = kind;
  c.n = n;
  c.m = m;
  c.field = f;
  c.seed = seed;
  return c;
}

void require_prime(const FieldSpec& f, const char* what) {
  if (!f.is_prime()) throw PreconditionError(std::string(what) + " is certified over a prime field");
}

void require_trials(int trials) {
  if (trials < 1) throw PreconditionError("certificates need at least one trial");
}

Certificate rank_certificate(CertificateKind kind, int n, int m, const FieldSpec& field, std::uint64_t seed,
                             int retries, bool on_section) {
  require_prime(field, "the Jacobian rank");
  Certificate c = make(kind, n, m, field, seed);
  c.expected_rank = generator_count(n, m);
  const auto coords = on_section ? section_coordinates(n, m) : all_coordinates(n, m);
  Rng rng(seed);
  const int attempts = std::max(1, retries);
  for (int a = 1; a <= attempts; ++a) {
    MatrixTuple point = on_section ? random_generic_section_tuple(n, m, field, rng) : rng.tuple(n, m, field);
    c.samples = a;
    c.achieved_rank = rank(generator_jacobian(point, coords));
    if (c.achieved_rank == c.expected_rank) {
      c.pass = true;
      break;
    }
  }
  std::ostringstream w;
  w << "rank " << c.achieved_rank << " of " << c.expected_rank << "x" << coords.size() << " after " << c.samples
    << " point(s)";
  c.witness = w.str();
  return c;
}

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Invariance: return "Invariance";
    case CertificateKind::FullRank: return "FullRank";
    case CertificateKind::SectionSquare: return "SectionSquare";
    case CertificateKind::ActionRules: return "ActionRules";
    case CertificateKind::SectionIdentities: return "SectionIdentities";
  }
  return "?";
}

std::string Certificate::report_line() const {
  std::ostringstream os;
  os << to_string(kind) << " n=" << n << " m=" << m << " field=" << field.to_string() << " seed=" << seed
     << " samples=" << samples << " verdict=" << (pass ? "pass" : "fail") << " witness=" << (witness.empty() ? "-" : witness);
  return os.str();
}

MatrixTuple random_generic_section_tuple(int n, int m, const FieldSpec& field, Rng& rng, long bound) {
  for (;;) {
    MatrixTuple t = rng.tuple(n, m, field, bound);
    ScalarMatrix& s = t[1];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) s(i, j) = Scalar::zero(field);
    if (genericity(s).generic()) return t;
  }
}

MatrixTuple random_generic_tuple(int n, int m, const FieldSpec& field, Rng& rng, long bound) {
  for (;;) {
    MatrixTuple t = rng.tuple(n, m, field, bound);
    if (genericity(t[1]).generic()) return t;
  }
}

std::vector<std::vector<Scalar>> generator_jacobian(const MatrixTuple& point,
                                                    const std::vector<std::array<int, 3>>& coordinates) {
  const FieldSpec& f = point.field();
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  std::vector<DualMatrix> base;
  for (const auto& x : point.components()) {
    DualMatrix d(x.n(), f);
    for (int i = 1; i <= x.n(); ++i)
      for (int j = 1; j <= x.n(); ++j) d(i, j) = dual_lift(x(i, j), zero);
    base.push_back(std::move(d));
  }
  const auto rows = static_cast<std::size_t>(generator_count(point.n(), point.m()));
  std::vector<std::vector<Scalar>> jac(rows, std::vector<Scalar>(coordinates.size(), zero));
  for (std::size_t c = 0; c < coordinates.size(); ++c) {
    auto [ell, i, j] = coordinates[c];
    std::vector<DualMatrix> lifted = base;
    lifted[static_cast<std::size_t>(ell - 1)](i, j) = dual_lift(point[ell](i, j), one);
    const auto values = generator_values(DualTuple(std::move(lifted)));
    for (std::size_t r = 0; r < rows; ++r) jac[r][c] = values[r].inf_part();
  }
  return jac;
}

Certificate certify_invariance(int n, int m, const FieldSpec& field, std::uint64_t seed, int trials,
                               const CertifyHooks& hooks) {
  require_trials(trials);
  Certificate c = make(CertificateKind::Invariance, n, m, field, seed);
  c.samples = trials;
  const auto eval = hooks.evaluator ? hooks.evaluator : [](const MatrixTuple& t) { return evaluate_invariants(t); };
  Rng rng(seed);
  c.pass = true;
  for (int trial = 1; trial <= trials; ++trial) {
    MatrixTuple t = rng.tuple(n, m, field);
    UnitriangularMatrix u = hooks.identity_group ? UnitriangularMatrix(n, field) : random_unitriangular(n, field, rng);
    const InvariantVector before = eval(t);
    const InvariantVector after = eval(adjoint_tuple(u, t));
    for (std::size_t r = 0; r < before.values.size(); ++r) {
      if (before.values[r] != after.values[r]) {
        c.pass = false;
        c.witness = "trial " + std::to_string(trial) + " generator " + before.labels[r].to_string() + " " +
                    before.values[r].to_string() + " -> " + after.values[r].to_string();
        return c;
      }
    }
  }
  return c;
}

Certificate certify_full_rank(int n, int m, const FieldSpec& prime_field, std::uint64_t seed, int retries) {
  return rank_certificate(CertificateKind::FullRank, n, m, prime_field, seed, retries, false);
}

Certificate certify_section_square(int n, int m, const FieldSpec& prime_field, std::uint64_t seed, int retries) {
  return rank_certificate(CertificateKind::SectionSquare, n, m, prime_field, seed, retries, true);
}

Certificate certify_section_identities(int n, const FieldSpec& field, std::uint64_t seed, int trials) {
  require_trials(trials);
  Certificate c = make(CertificateKind::SectionIdentities, n, 1, field, seed);
  c.samples = trials;
  c.pass = true;
  const AntiTriangularSigns sg = anti_triangular_signs(n);
  Rng rng(seed);
  auto fail = [&](int trial, const std::string& what) {
    c.pass = false;
    c.witness = "trial " + std::to_string(trial) + " " + what;
  };
  for (int trial = 1; trial <= trials; ++trial) {
    ScalarMatrix s = rng.matrix(n, field);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) s(i, j) = Scalar::zero(field);
    const MinorTable<Scalar> mt(s);

    for (int k = 1; k <= n; ++k)
      for (int j = 1; j < k; ++j)
        if (!mt.N(j, k).is_zero()) {
          fail(trial, "N_{" + std::to_string(j) + "," + std::to_string(k) + "}(S) != 0");
          return c;
        }

    for (int k = 1; k <= n; ++k) {
      Scalar prod(field, static_cast<long>(sg.epsilon(k)));
      for (int r = k; r <= n; ++r) prod *= s(r, n + 1 - r);
      if (mt.D(k) != prod) {
        fail(trial, "D_" + std::to_string(k) + "(S) product identity");
        return c;
      }
    }

    for (auto [i, k] : ordered_pairs(n)) {
      const Scalar d_next = i + 1 <= n ? mt.D(i + 1) : Scalar::one(field);
      Scalar rhs = Scalar(field, static_cast<long>(sg.eta_of(i, k))) * d_next * mt.D(k) * s(i, k);
      if (p_pair(mt, mt, n, i, k, field) != rhs) {
        fail(trial, "P_{" + std::to_string(i) + "," + std::to_string(k) + "}(S) area identity");
        return c;
      }
    }
  }
  return c;
}

Certificate certify_action_rules(int n, const FieldSpec& field, std::uint64_t seed, int trials,
                                 const CertifyHooks& hooks) {
  require_trials(trials);
  Certificate c = make(CertificateKind::ActionRules, n, 2, field, seed);
  c.samples = trials;
  c.pass = true;
  Rng rng(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    ScalarMatrix x = rng.matrix(n, field);
    ScalarMatrix y = rng.matrix(n, field);
    for (int a = 1; a <= n - 1; ++a) {
      Scalar t = hooks.zero_parameter ? Scalar::zero(field) : rng.scalar(field);
      ActionReport r = check_elementary_action(x, y, a, t, hooks.convention);
      if (!r.all_passed()) {
        c.pass = false;
        c.witness = "trial " + std::to_string(trial) + " t=" + t.to_string() + " case " + r.first_failure();
        return c;
      }
    }
  }
  return c;
}

std::vector<Certificate> certify_all(const SuiteOptions& o) {
  const FieldSpec q = FieldSpec::rational();
  const FieldSpec fp = FieldSpec::prime(o.p);
  std::vector<Certificate> out;
  out.push_back(certify_invariance(o.n, o.m, q, o.seed, o.trials));
  out.push_back(certify_full_rank(o.n, o.m, fp, o.seed));
  out.push_back(certify_section_square(o.n, o.m, fp, o.seed));
  out.push_back(certify_action_rules(o.n, q, o.seed, o.trials));
  out.push_back(certify_section_identities(o.n, q, o.seed, o.trials));
  return out;
}

}  // namespace uinv

#include "uinv/selftest.hpp"

#include <functional>

#include "uinv/canonical.hpp"
#include "uinv/certify.hpp"

namespace uinv {
namespace {

std::string config(int n, int m) { return " n=" + std::to_string(n) + " m=" + std::to_string(m); }

void add_certificate(std::vector<SelfTestLine>& out, const Certificate& c) {
  out.push_back({to_string(c.kind) + config(c.n, c.m) + " " + c.field.to_string(), c.pass, c.witness});
}

// Canonical form is U-invariant, preserves invariants and, for m = 1, is
// rebuilt by reconstruct_section_single.
SelfTestLine canonical_check(int n, int m, std::uint64_t seed, int trials) {
  const FieldSpec q = FieldSpec::rational();
  Rng rng(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    MatrixTuple t = random_generic_tuple(n, m, q, rng);
    UnitriangularMatrix u = random_unitriangular(n, q, rng);
    const SectionResult a = bring_to_section(t);
    const SectionResult b = bring_to_section(adjoint_tuple(u, t));
    std::string bad;
    if (!(a.section == b.section)) bad = "section differs under conjugation";
    else if (!is_section_shape(a.section[1])) bad = "first component not in section shape";
    else if (!(evaluate_invariants(a.section) == evaluate_invariants(t))) bad = "invariants not preserved";
    else if (m == 1 && !(reconstruct_section_single(evaluate_invariants(t), n) == a.section[1]))
      bad = "reconstruction differs from canonical form";
    if (!bad.empty()) return {"Canonical" + config(n, m), false, "trial " + std::to_string(trial) + " " + bad};
  }
  return {"Canonical" + config(n, m), true, ""};
}

SelfTestLine equivalence_check(int n, int m, std::uint64_t seed, int trials) {
  const FieldSpec fp = FieldSpec::prime(kCertificatePrime);
  Rng rng(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    MatrixTuple t = random_generic_tuple(n, m, fp, rng);
    UnitriangularMatrix u = random_unitriangular(n, fp, rng);
    OrbitComparison same = compare_orbits(t, adjoint_tuple(u, t));
    if (!same.invariants_equal || !same.conjugator || !(*same.conjugator == u)) {
      return {"Equivalence" + config(n, m), false, "trial " + std::to_string(trial) + " conjugate pair not recognised"};
    }
    OrbitComparison other = compare_orbits(t, rng.tuple(n, m, fp));
    if (other.invariants_equal) {
      return {"Equivalence" + config(n, m), false, "trial " + std::to_string(trial) + " spurious invariant equality"};
    }
  }
  return {"Equivalence" + config(n, m), true, ""};
}

}  // namespace

std::vector<SelfTestLine> run_selftest(const SelfTestOptions& o) {
  std::vector<SelfTestLine> out;
  const FieldSpec q = FieldSpec::rational();
  const FieldSpec fp = FieldSpec::prime(kCertificatePrime);

  bool counts = true;
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m)
      counts = counts && static_cast<long>(enumerate_generators(n, m).size()) == generator_count(n, m);
  out.push_back({"GeneratorCount n<=6 m<=4", counts, ""});

  for (int n = 1; n <= o.max_n; ++n) {
    add_certificate(out, certify_action_rules(n, q, o.seed, o.trials));
    add_certificate(out, certify_section_identities(n, q, o.seed, o.trials));
    for (int m = 1; m <= o.max_m; ++m) {
      add_certificate(out, certify_invariance(n, m, q, o.seed, o.trials));
      add_certificate(out, certify_invariance(n, m, fp, o.seed, o.trials));
      add_certificate(out, certify_full_rank(n, m, fp, o.seed));
      add_certificate(out, certify_section_square(n, m, fp, o.seed));
      out.push_back(canonical_check(n, m, o.seed, o.trials));
      out.push_back(equivalence_check(n, m, o.seed, o.trials));
    }
  }
  return out;
}

}  // namespace uinv

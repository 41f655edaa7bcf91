#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uinv {

struct SelfTestLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfTestOptions {
  int max_n = 5;
  int max_m = 3;
  std::uint64_t seed = 1;
  int trials = 20;
};

/// Desk-scale suite over every (n, m) with n <= max_n, m <= max_m: all
/// certificates, canonical-form checks and the orbit-equivalence pipeline.
std::vector<SelfTestLine> run_selftest(const SelfTestOptions& opts = {});

}  // namespace uinv

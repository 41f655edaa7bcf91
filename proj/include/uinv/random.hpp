#pragma once

// Reproducible sampling. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; integer ranges are mapped with a
// plain modulo (lo + x mod (hi - lo + 1)) instead of
// std::uniform_int_distribution, whose algorithm is implementation-defined.

#include <cstdint>
#include <random>

#include "uinv/linalg.hpp"

namespace uinv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Over Q: integer in [-bound, bound]. Over F_p: residue in [0, p).
  Scalar scalar(const FieldSpec& field, long bound = 10);

  Matrix<Scalar> matrix(int n, const FieldSpec& field, long bound = 10);
  MatrixTuple tuple(int n, int m, const FieldSpec& field, long bound = 10);

 private:
  std::mt19937_64 engine_;
};

}  // namespace uinv

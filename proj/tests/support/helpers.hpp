#pragma once

#include <vector>

#include "oracles.hpp"
#include "uinv/linalg.hpp"

namespace testing_support {

inline const uinv::FieldSpec kQ = uinv::FieldSpec::rational();

inline uinv::ScalarMatrix mat(const std::vector<std::vector<long>>& rows, const uinv::FieldSpec& f = kQ) {
  return uinv::ScalarMatrix::from_rows(f, rows);
}

inline uinv::Scalar q(long num, long den = 1) { return uinv::Scalar::from_rational(mpq_class(num, den)); }

inline oracle::QMatrix to_q(const uinv::ScalarMatrix& m) {
  oracle::QMatrix out(static_cast<std::size_t>(m.n()), std::vector<mpq_class>(static_cast<std::size_t>(m.n())));
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m(i, j).rational();
  return out;
}

inline uinv::Scalar from_q(const mpq_class& v) { return uinv::Scalar::from_rational(v); }

}  // namespace testing_support

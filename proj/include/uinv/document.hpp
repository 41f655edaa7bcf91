#pragma once

// TupleDocument: JSON serialization of a point of Mat(n)^m.
//
//   {"n": 2, "m": 1, "field": {"kind": "rational"},
//    "matrices": [[["1", "2"], ["3", "4"]]]}
//
// "kind" is "rational" or "prime"; a prime field carries "p". Scalars are
// always strings so arbitrary-precision values survive the round trip.

#include <string>

#include "uinv/linalg.hpp"

namespace uinv {

MatrixTuple parse_tuple_document(const std::string& json_text);
MatrixTuple read_tuple_document(const std::string& path);

std::string write_tuple_document(const MatrixTuple& t, int indent = 2);

/// Rows of a matrix as "[a, b; c, d]" for human-readable reports.
std::string format_matrix(const ScalarMatrix& m);

}  // namespace uinv

#include <doctest.h>

#include <json.hpp>

#include "../support/helpers.hpp"
#include "uinv/document.hpp"
#include "uinv/random.hpp"

using namespace uinv;
using namespace testing_support;

TEST_CASE("parse a rational document") {
  MatrixTuple t = parse_tuple_document(
      R"({"n": 2, "m": 1, "field": {"kind": "rational"}, "matrices": [[["1", "2/4"], ["-3", "4"]]]})");
  CHECK(t.n() == 2);
  CHECK(t.m() == 1);
  CHECK(t[1](1, 2) == q(1, 2));
  CHECK(t[1](2, 1) == q(-3));
}

TEST_CASE("parse a prime document") {
  MatrixTuple t = parse_tuple_document(
      R"({"n": 1, "m": 2, "field": {"kind": "prime", "p": 7}, "matrices": [[["10"]], [["-1"]]]})");
  CHECK(t.field() == FieldSpec::prime(7));
  CHECK(t[1](1, 1).residue() == 3);
  CHECK(t[2](1, 1).residue() == 6);
  MatrixTuple s = parse_tuple_document(
      R"({"n": 1, "m": 1, "field": {"kind": "prime", "p": "2147483647"}, "matrices": [[["5"]]]})");
  CHECK(s.field().p == kCertificatePrime);
}

TEST_CASE("malformed documents") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"m": 1, "field": {"kind": "rational"}, "matrices": [[["1"]]]})",
      R"({"n": 0, "m": 1, "field": {"kind": "rational"}, "matrices": []})",
      R"({"n": 1, "m": 1, "field": {"kind": "real"}, "matrices": [[["1"]]]})",
      R"({"n": 1, "m": 1, "field": {"kind": "prime"}, "matrices": [[["1"]]]})",
      R"({"n": 1, "m": 2, "field": {"kind": "rational"}, "matrices": [[["1"]]]})",
      R"({"n": 2, "m": 1, "field": {"kind": "rational"}, "matrices": [[["1", "2"], ["3"]]]})",
      R"({"n": 1, "m": 1, "field": {"kind": "rational"}, "matrices": [[[1]]]})",
      R"({"n": 1, "m": 1, "field": {"kind": "rational"}, "matrices": [[["1.5"]]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_tuple_document(text), ParseError);
  }
  CHECK_THROWS_AS(parse_tuple_document(
                      R"({"n": 1, "m": 1, "field": {"kind": "prime", "p": 8}, "matrices": [[["1"]]]})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_tuple_document(R"({"n": 1, "m": 1, "field": {"kind": "rational"}, "matrices": [[["1/0"]]]})"),
                  DomainError);
  CHECK_THROWS_AS(read_tuple_document("/nonexistent/file.json"), ParseError);
}

TEST_CASE("documents round-trip and keep scalars as strings") {
  for (const FieldSpec& f : {kQ, FieldSpec::prime(kCertificatePrime)}) {
    Rng rng(60);
    MatrixTuple t = rng.tuple(3, 2, f);
    t[1](1, 1) = f.is_prime() ? Scalar(f, 12345) : q(-7, 9);
    const std::string text = write_tuple_document(t);
    CHECK(parse_tuple_document(text) == t);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["matrices"][0][0][0].is_string());
  }
}

TEST_CASE("format_matrix") { CHECK(format_matrix(mat({{1, 2}, {3, 4}})) == "[1, 2; 3, 4]"); }

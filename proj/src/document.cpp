#include "uinv/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uinv {
namespace {

using nlohmann::json;

FieldSpec parse_field(const json& f) {
  if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string()) {
    throw ParseError("document field must be an object with a string \"kind\"");
  }
  const std::string kind = f["kind"].get<std::string>();
  if (kind == "rational" || kind == "Rational") return FieldSpec::rational();
  if (kind == "prime" || kind == "Prime") {
    if (!f.contains("p")) throw ParseError("prime field requires \"p\"");
    const json& p = f["p"];
    std::uint64_t value = 0;
    if (p.is_number_unsigned()) {
      value = p.get<std::uint64_t>();
    } else if (p.is_string()) {
      try {
        std::size_t used = 0;
        value = std::stoull(p.get<std::string>(), &used);
        if (used != p.get<std::string>().size()) throw ParseError("bad p");
      } catch (const std::exception&) {
        throw ParseError("malformed prime modulus \"" + p.get<std::string>() + "\"");
      }
    } else {
      throw ParseError("prime modulus must be a positive integer");
    }
    return FieldSpec::prime(value);
  }
  throw ParseError("unknown field kind \"" + kind + "\"");
}

int positive_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 1) {
    throw ParseError(std::string("document needs a positive integer \"") + key + "\"");
  }
  return doc[key].get<int>();
}

}  // namespace

MatrixTuple parse_tuple_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("tuple document must be a JSON object");
  const int n = positive_int(doc, "n");
  const int m = positive_int(doc, "m");
  if (!doc.contains("field")) throw ParseError("document needs \"field\"");
  const FieldSpec field = parse_field(doc["field"]);

  const json& mats = doc.contains("matrices") ? doc["matrices"] : json();
  if (!mats.is_array() || static_cast<int>(mats.size()) != m) {
    throw ParseError("\"matrices\" must be an array of m = " + std::to_string(m) + " matrices");
  }
  std::vector<ScalarMatrix> comps;
  for (int ell = 0; ell < m; ++ell) {
    const json& rows = mats[static_cast<std::size_t>(ell)];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw ParseError("matrix " + std::to_string(ell + 1) + " must have n = " + std::to_string(n) + " rows");
    }
    ScalarMatrix x(n, field);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError("matrix " + std::to_string(ell + 1) + " row " + std::to_string(i + 1) + " must have " +
                         std::to_string(n) + " entries");
      }
      for (int j = 0; j < n; ++j) {
        const json& e = row[static_cast<std::size_t>(j)];
        if (!e.is_string()) throw ParseError("matrix entries must be strings");
        x(i + 1, j + 1) = parse_scalar(e.get<std::string>(), field);
      }
    }
    comps.push_back(std::move(x));
  }
  return MatrixTuple(std::move(comps));
}

MatrixTuple read_tuple_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tuple_document(ss.str());
}

std::string write_tuple_document(const MatrixTuple& t, int indent) {
  json doc;
  doc["n"] = t.n();
  doc["m"] = t.m();
  if (t.field().is_prime()) doc["field"] = {{"kind", "prime"}, {"p", t.field().p}};
  else doc["field"] = {{"kind", "rational"}};
  json mats = json::array();
  for (const auto& x : t.components()) {
    json rows = json::array();
    for (int i = 1; i <= x.n(); ++i) {
      json row = json::array();
      for (int j = 1; j <= x.n(); ++j) row.push_back(x(i, j).to_string());
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  doc["matrices"] = std::move(mats);
  return doc.dump(indent);
}

std::string format_matrix(const ScalarMatrix& m) {
  std::string s = "[";
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = 1; j <= m.n(); ++j) {
      s += m(i, j).to_string();
      if (j < m.n()) s += ", ";
    }
    if (i < m.n()) s += "; ";
  }
  return s + "]";
}

}  // namespace uinv

#include "uinv/invariants.hpp"

#include <regex>

namespace uinv {

std::string GeneratorLabel::to_string() const {
  const std::string pair = "(" + std::to_string(i) + "," + std::to_string(k) + ")";
  switch (family) {
    case Family::D: return "D[" + std::to_string(ell) + "," + std::to_string(k) + "]";
    case Family::P: return "P[" + std::to_string(ell) + "," + pair + "]";
    case Family::Pcross: return "PX[1," + std::to_string(ell) + "," + pair + "]";
  }
  return "?";
}

GeneratorLabel GeneratorLabel::parse(const std::string& text) {
  static const std::regex d_re(R"(D\[(\d+),(\d+)\])");
  static const std::regex p_re(R"(P\[(\d+),\((\d+),(\d+)\)\])");
  static const std::regex x_re(R"(PX\[1,(\d+),\((\d+),(\d+)\)\])");
  std::smatch mt;
  if (std::regex_match(text, mt, d_re)) return d(std::stoi(mt[1]), std::stoi(mt[2]));
  if (std::regex_match(text, mt, p_re)) return p(std::stoi(mt[1]), std::stoi(mt[2]), std::stoi(mt[3]));
  if (std::regex_match(text, mt, x_re)) return cross(std::stoi(mt[1]), std::stoi(mt[2]), std::stoi(mt[3]));
  throw ParseError("malformed generator label: '" + text + "'");
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= 1; --i)
      if (n + 1 - i < k) out.emplace_back(i, k);
  return out;
}

long generator_count(int n, int m) {
  return static_cast<long>(m) * n * n - static_cast<long>(n) * (n - 1) / 2;
}

std::vector<GeneratorLabel> enumerate_generators(int n, int m) {
  if (n < 1 || m < 1) throw PreconditionError("enumerate_generators needs n >= 1 and m >= 1");
  const auto pairs = ordered_pairs(n);
  std::vector<GeneratorLabel> out;
  for (int ell = 1; ell <= m; ++ell)
    for (int k = 1; k <= n; ++k) out.push_back(GeneratorLabel::d(ell, k));
  for (int ell = 1; ell <= m; ++ell)
    for (auto [i, k] : pairs) out.push_back(GeneratorLabel::p(ell, i, k));
  for (int ell = 2; ell <= m; ++ell)
    for (auto [i, k] : pairs) out.push_back(GeneratorLabel::cross(ell, i, k));
  return out;
}

InvariantVector evaluate_invariants(const MatrixTuple& t) {
  return {enumerate_generators(t.n(), t.m()), generator_values(t)};
}

}  // namespace uinv

// uinv: command-line front end over the C API.
//
//   uinv generators --n N --m M
//   uinv eval FILE
//   uinv canon FILE [--out SECTION_FILE]
//   uinv equiv FILE1 FILE2
//   uinv certify --n N --m M [--p P] [--seed S] [--trials T]
//   uinv selftest [--seed S] [--trials T]
//
// Exit codes: 0 success, 1 usage/parse error, 2 precondition failure,
// 3 certificate failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "uinv/uinv.h"

namespace {

struct TupleDeleter {
  void operator()(uinv_tuple* t) const { uinv_tuple_free(t); }
};
using TuplePtr = std::unique_ptr<uinv_tuple, TupleDeleter>;

struct StringDeleter {
  void operator()(char* s) const { uinv_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report(uinv_status st) {
  if (st != UINV_OK) std::cerr << "error: " << uinv_last_error() << "\n";
  return static_cast<int>(st);
}

void print(const StringPtr& s) {
  if (s) std::cout << s.get();
}

int load(const std::string& path, TuplePtr& out) {
  uinv_tuple* t = nullptr;
  uinv_status st = uinv_tuple_read(path.c_str(), &t);
  out.reset(t);
  return report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators, canonical forms and certificates for U-invariants of matrix tuples"};
  app.require_subcommand(1);

  int n = 0, m = 0, trials = 20;
  std::uint64_t p = 2147483647ULL, seed = 1;
  std::string file1, file2, out_path;

  auto* gen = app.add_subcommand("generators", "List the free generators in canonical order");
  gen->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "Tuple length")->required()->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Evaluate every generator on a tuple document");
  eval->add_option("file", file1, "Tuple document")->required();

  auto* canon = app.add_subcommand("canon", "Conjugate a generic tuple into the section");
  canon->add_option("file", file1, "Tuple document")->required();
  canon->add_option("--out", out_path, "Also write the section tuple document here");

  auto* equiv = app.add_subcommand("equiv", "Test two tuples for U-equivalence");
  equiv->add_option("file1", file1, "First tuple document")->required();
  equiv->add_option("file2", file2, "Second tuple document")->required();

  auto* cert = app.add_subcommand("certify", "Run all certificates for one (n, m)");
  cert->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  cert->add_option("--m", m, "Tuple length")->required()->check(CLI::PositiveNumber);
  cert->add_option("--p", p, "Prime for the rank certificates");
  cert->add_option("--seed", seed, "Random seed");
  cert->add_option("--trials", trials, "Trials per sampled certificate")->check(CLI::PositiveNumber);

  auto* self = app.add_subcommand("selftest", "Desk-scale suite over n <= 5, m <= 3");
  self->add_option("--seed", seed, "Random seed");
  self->add_option("--trials", trials, "Trials per sampled check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  char* raw = nullptr;
  if (gen->parsed()) {
    uinv_status st = uinv_generators(n, m, &raw);
    StringPtr text(raw);
    print(text);
    return report(st);
  }
  if (eval->parsed()) {
    TuplePtr t;
    if (int rc = load(file1, t)) return rc;
    uinv_status st = uinv_eval(t.get(), &raw);
    StringPtr text(raw);
    print(text);
    return report(st);
  }
  if (canon->parsed()) {
    TuplePtr t;
    if (int rc = load(file1, t)) return rc;
    uinv_tuple* section = nullptr;
    uinv_status st = uinv_canon(t.get(), &raw, &section);
    StringPtr text(raw);
    TuplePtr s(section);
    print(text);
    if (st != UINV_OK) return report(st);
    char* json = nullptr;
    st = uinv_tuple_write(s.get(), &json);
    StringPtr doc(json);
    if (st != UINV_OK) return report(st);
    std::cout << "SECTION\n" << doc.get() << "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return UINV_ERR_PARSE;
      }
      out << doc.get() << "\n";
    }
    return 0;
  }
  if (equiv->parsed()) {
    TuplePtr a, b;
    if (int rc = load(file1, a)) return rc;
    if (int rc = load(file2, b)) return rc;
    uinv_status st = uinv_equiv(a.get(), b.get(), &raw);
    StringPtr text(raw);
    print(text);
    return report(st);
  }
  if (cert->parsed()) {
    uinv_status st = uinv_certify(n, m, p, seed, trials, &raw);
    StringPtr text(raw);
    print(text);
    return report(st);
  }
  if (self->parsed()) {
    uinv_status st = uinv_selftest(seed, trials, &raw);
    StringPtr text(raw);
    print(text);
    return report(st);
  }
  return 1;
}

#include "uinv/uinv.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "uinv/canonical.hpp"
#include "uinv/certify.hpp"
#include "uinv/document.hpp"
#include "uinv/selftest.hpp"

struct uinv_tuple {
  uinv::MatrixTuple value;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
uinv_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const uinv::ParseError& e) {
    g_last_error = e.what();
    return UINV_ERR_PARSE;
  } catch (const uinv::PreconditionError& e) {
    g_last_error = e.what();
    return UINV_ERR_PRECONDITION;
  } catch (const uinv::DomainError& e) {
    g_last_error = e.what();
    return UINV_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UINV_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UINV_ERR_INTERNAL;
  }
}

uinv_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return UINV_ERR_PARSE;
}

}  // namespace

extern "C" {

const char* uinv_last_error(void) { return g_last_error.c_str(); }

void uinv_string_free(char* s) { std::free(s); }

uinv_status uinv_tuple_parse(const char* json_text, uinv_tuple** out) {
  if (!json_text || !out) return null_argument("uinv_tuple_parse");
  return guarded([&] {
    *out = new uinv_tuple{uinv::parse_tuple_document(json_text)};
    return UINV_OK;
  });
}

uinv_status uinv_tuple_read(const char* path, uinv_tuple** out) {
  if (!path || !out) return null_argument("uinv_tuple_read");
  return guarded([&] {
    *out = new uinv_tuple{uinv::read_tuple_document(path)};
    return UINV_OK;
  });
}

uinv_status uinv_tuple_write(const uinv_tuple* t, char** out_json) {
  if (!t || !out_json) return null_argument("uinv_tuple_write");
  return guarded([&] {
    *out_json = dup(uinv::write_tuple_document(t->value));
    return UINV_OK;
  });
}

void uinv_tuple_free(uinv_tuple* t) { delete t; }

int uinv_tuple_n(const uinv_tuple* t) { return t ? t->value.n() : 0; }
int uinv_tuple_m(const uinv_tuple* t) { return t ? t->value.m() : 0; }

uinv_status uinv_generators(int n, int m, char** out_text) {
  if (!out_text) return null_argument("uinv_generators");
  return guarded([&] {
    const auto labels = uinv::enumerate_generators(n, m);
    std::string s;
    for (const auto& l : labels) s += l.to_string() + "\n";
    s += std::to_string(labels.size()) + "\n";
    *out_text = dup(s);
    return UINV_OK;
  });
}

uinv_status uinv_eval(const uinv_tuple* t, char** out_text) {
  if (!t || !out_text) return null_argument("uinv_eval");
  return guarded([&] {
    const auto inv = uinv::evaluate_invariants(t->value);
    std::string s;
    for (std::size_t r = 0; r < inv.labels.size(); ++r)
      s += inv.labels[r].to_string() + " " + inv.values[r].to_string() + "\n";
    *out_text = dup(s);
    return UINV_OK;
  });
}

uinv_status uinv_canon(const uinv_tuple* t, char** out_report, uinv_tuple** out_section) {
  if (!t || !out_report || !out_section) return null_argument("uinv_canon");
  *out_report = nullptr;
  *out_section = nullptr;
  return guarded([&] {
    const uinv::GenericityReport rep = uinv::genericity(t->value[1]);
    if (!rep.generic()) {
      *out_report = dup(rep.to_string() + "\n");
      g_last_error = "tuple is not generic: some corner minor D_k(X_1), k >= 2, vanishes";
      return UINV_ERR_PRECONDITION;
    }
    uinv::SectionResult r = uinv::bring_to_section(t->value);
    *out_report = dup(rep.to_string() + "\nCONJUGATOR " + uinv::format_matrix(r.u.matrix()) + "\n");
    *out_section = new uinv_tuple{std::move(r.section)};
    return UINV_OK;
  });
}

uinv_status uinv_equiv(const uinv_tuple* a, const uinv_tuple* b, char** out_text) {
  if (!a || !b || !out_text) return null_argument("uinv_equiv");
  return guarded([&] {
    const uinv::OrbitComparison c = uinv::compare_orbits(a->value, b->value);
    std::string s = std::string("INVARIANTS_EQUAL ") + (c.invariants_equal ? "yes" : "no") + "\n";
    if (c.invariants_equal) {
      if (c.conjugator) s += "CONJUGATE yes\nCONJUGATOR " + uinv::format_matrix(c.conjugator->matrix()) + "\n";
      else s += "CONJUGATE UNDECIDED\n";
    }
    *out_text = dup(s);
    return UINV_OK;
  });
}

uinv_status uinv_certify(int n, int m, uint64_t p, uint64_t seed, int trials, char** out_text) {
  if (!out_text) return null_argument("uinv_certify");
  return guarded([&] {
    if (n < 1 || m < 1) throw uinv::PreconditionError("certify needs n >= 1 and m >= 1");
    uinv::SuiteOptions o;
    o.n = n;
    o.m = m;
    o.p = p;
    o.seed = seed;
    o.trials = trials;
    bool all = true;
    std::string s;
    for (const auto& c : uinv::certify_all(o)) {
      s += c.report_line() + "\n";
      all = all && c.pass;
    }
    *out_text = dup(s);
    if (!all) g_last_error = "certificate failure";
    return all ? UINV_OK : UINV_ERR_CERTIFICATE;
  });
}

uinv_status uinv_selftest(uint64_t seed, int trials, char** out_text) {
  if (!out_text) return null_argument("uinv_selftest");
  return guarded([&] {
    uinv::SelfTestOptions o;
    o.seed = seed;
    o.trials = trials;
    bool all = true;
    std::string s;
    int passed = 0, total = 0;
    for (const auto& line : uinv::run_selftest(o)) {
      s += std::string(line.pass ? "PASS " : "FAIL ") + line.name;
      if (!line.detail.empty()) s += " (" + line.detail + ")";
      s += "\n";
      all = all && line.pass;
      passed += line.pass ? 1 : 0;
      ++total;
    }
    s += "SUMMARY " + std::to_string(passed) + "/" + std::to_string(total) + " passed\n";
    *out_text = dup(s);
    if (!all) g_last_error = "self-test failure";
    return all ? UINV_OK : UINV_ERR_CERTIFICATE;
  });
}

}  // extern "C"

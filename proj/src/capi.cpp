// SPDX-License-Identifier: Apache-2.0

#include "lathom/lathom.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "errors.hpp"
#include "report.hpp"
#include "verify.hpp"

struct lathom_poset {
  std::shared_ptr<const lathom::Poset> p;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lathom_status status_of(const std::exception& e) {
  if (dynamic_cast<const lathom::ParseError*>(&e)) return LATHOM_PARSE_ERROR;
  if (dynamic_cast<const lathom::SemanticError*>(&e)) return LATHOM_SEMANTIC_ERROR;
  return LATHOM_INTERNAL_ERROR;
}

// Runs the body, routing exceptions into statuses and the thread-local
// error slot.
template <typename F>
lathom_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (...) {
    g_last_error = "unknown error";
    return LATHOM_INTERNAL_ERROR;
  }
}

lathom::ReportOptions options_of(const char* output, bool timings) {
  if (!output) throw lathom::SemanticError("output mode is null");
  lathom::ReportOptions opt;
  opt.timings = timings;
  if (std::strcmp(output, "json") == 0)
    opt.json = true;
  else if (std::strcmp(output, "text") != 0)
    throw lathom::SemanticError(std::string("unknown output mode: ") + output);
  return opt;
}

lathom::Field field_of(const char* field) {
  if (!field) throw lathom::SemanticError("field name is null");
  return lathom::Field::parse(field);
}

}  // namespace

extern "C" {

const char* lathom_version(void) { return LATHOM_VERSION; }

const char* lathom_last_error(void) { return g_last_error.c_str(); }

lathom_status lathom_poset_parse_json(const char* text, lathom_poset** out) {
  return guarded([&]() -> lathom_status {
    if (!text || !out) throw lathom::SemanticError("null argument");
    auto p = std::make_shared<const lathom::Poset>(lathom::Poset::from_json(text));
    *out = new lathom_poset{std::move(p)};
    return LATHOM_OK;
  });
}

void lathom_poset_free(lathom_poset* p) { delete p; }

int lathom_poset_size(const lathom_poset* p) {
  return p ? static_cast<int>(p->p->size()) : -1;
}

lathom_status lathom_analyze(const lathom_poset* p, const char* field, const char* output,
                             char** report) {
  return guarded([&]() -> lathom_status {
    if (!p || !report) throw lathom::SemanticError("null argument");
    const std::string text =
        lathom::render_analysis(p->p, field_of(field), options_of(output, false));
    *report = dup_string(text);
    return LATHOM_OK;
  });
}

lathom_status lathom_resolve(const lathom_poset* p, const char* field, const char* selector,
                             const char* output, char** report) {
  return guarded([&]() -> lathom_status {
    if (!p || !selector || !report) throw lathom::SemanticError("null argument");
    const std::string sel = selector;
    const auto colon = sel.find(':');
    if (colon == std::string::npos)
      throw lathom::SemanticError("module selector must look like kind:label");
    const std::string text =
        lathom::render_resolution(p->p, field_of(field), sel.substr(0, colon),
                                  sel.substr(colon + 1), options_of(output, false));
    *report = dup_string(text);
    return LATHOM_OK;
  });
}

lathom_status lathom_verify(const lathom_poset* p, const char* field, long budget,
                            int timings, const char* output, char** report,
                            int* all_passed) {
  return guarded([&]() -> lathom_status {
    if (!p || !report) throw lathom::SemanticError("null argument");
    const lathom::Field f = field_of(field);
    const auto rep = lathom::verify_poset(p->p, f, budget);
    *report = dup_string(
        lathom::render_verification(rep, "verify", f, options_of(output, timings != 0)));
    const bool ok = rep.all_passed();
    if (all_passed) *all_passed = ok ? 1 : 0;
    return ok ? LATHOM_OK : LATHOM_CHECK_FAILED;
  });
}

lathom_status lathom_sweep(int n, const char* field, long budget, int timings,
                           const char* output, char** report, int* all_passed) {
  return guarded([&]() -> lathom_status {
    if (!report) throw lathom::SemanticError("null argument");
    const lathom::Field f = field_of(field);
    const auto rep = lathom::sweep(n, f, budget);
    *report = dup_string(
        lathom::render_verification(rep, "sweep", f, options_of(output, timings != 0)));
    const bool ok = rep.all_passed();
    if (all_passed) *all_passed = ok ? 1 : 0;
    return ok ? LATHOM_OK : LATHOM_CHECK_FAILED;
  });
}

void lathom_string_free(char* s) { std::free(s); }

}  // extern "C"

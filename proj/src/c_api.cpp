#include "spinbound/spinbound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "error.hpp"
#include "input.hpp"
#include "report.hpp"
#include "verify.hpp"

struct sb_curvature {
  spinbound::CurvatureInput input;
};

namespace {

thread_local std::string g_last_error;

sb_status map_code(spinbound::ErrorCode c) {
  switch (c) {
    case spinbound::ErrorCode::kInvalidArgument: return SB_ERR_INVALID_ARGUMENT;
    case spinbound::ErrorCode::kValidation: return SB_ERR_VALIDATION;
    case spinbound::ErrorCode::kParse: return SB_ERR_PARSE;
    case spinbound::ErrorCode::kUnknownId: return SB_ERR_UNKNOWN_ID;
    case spinbound::ErrorCode::kNumeric: return SB_ERR_NUMERIC;
  }
  return SB_ERR_INTERNAL;
}

template <class F>
sb_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SB_OK;
  } catch (const spinbound::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return SB_ERR_INTERNAL;
}

sb_status null_argument(const char* what) {
  g_last_error = std::string(what) + " is null";
  return SB_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

sb_status make(sb_curvature** out, spinbound::CurvatureInput&& in) {
  *out = new sb_curvature{std::move(in)};
  return SB_OK;
}

}  // namespace

extern "C" {

void sb_report_options_init(sb_report_options* opt) {
  if (!opt) return;
  const spinbound::ReportOptions d;
  opt->chiral = d.chiral ? 1 : 0;
  opt->restarts = d.restarts;
  opt->seed = d.seed;
}

void sb_verify_options_init(sb_verify_options* opt) {
  if (!opt) return;
  static const int dims[] = {4, 5, 6, 7};
  opt->suite = "all";
  opt->dims = dims;
  opt->dim_count = 4;
  opt->trials = 200;
  opt->seed = 1;
}

sb_status sb_curvature_from_catalog(const char* id, const char* params, sb_curvature** out) {
  if (!id) return null_argument("id");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    make(out, spinbound::input_from_catalog(id, spinbound::parse_params(params ? params : "")));
  });
}

sb_status sb_curvature_from_json(const char* text, sb_curvature** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { make(out, spinbound::input_from_json(text)); });
}

sb_status sb_curvature_from_file(const char* path, sb_curvature** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { make(out, spinbound::input_from_file(path)); });
}

void sb_curvature_free(sb_curvature* c) { delete c; }

int sb_curvature_dim(const sb_curvature* c) { return c ? c->input.n : 0; }

size_t sb_curvature_sample_count(const sb_curvature* c) {
  return c ? c->input.samples.size() : 0;
}

sb_status sb_report_run(const sb_curvature* c, const sb_report_options* opt, char** json_out) {
  if (!c) return null_argument("curvature");
  if (!json_out) return null_argument("json_out");
  *json_out = nullptr;
  return guarded([&] {
    spinbound::ReportOptions o;
    if (opt) {
      o.chiral = opt->chiral != 0;
      o.restarts = opt->restarts;
      o.seed = opt->seed;
    }
    *json_out = dup(spinbound::emit_json(spinbound::run_report(c->input, o)));
  });
}

sb_status sb_verify_run(const sb_verify_options* opt, char** json_out, int* all_passed) {
  if (!json_out) return null_argument("json_out");
  *json_out = nullptr;
  if (all_passed) *all_passed = 0;
  return guarded([&] {
    spinbound::VerifyOptions o;
    if (opt) {
      if (opt->suite) o.suite = opt->suite;
      if (opt->dims && opt->dim_count) o.dims.assign(opt->dims, opt->dims + opt->dim_count);
      o.trials = opt->trials;
      o.seed = opt->seed;
    }
    const spinbound::VerifyOutcome r = spinbound::run_verify(o);
    *json_out = dup(spinbound::emit_json(r.doc));
    if (all_passed) *all_passed = r.passed ? 1 : 0;
  });
}

sb_status sb_format_text(const char* json, char** text_out) {
  if (!json) return null_argument("json");
  if (!text_out) return null_argument("text_out");
  *text_out = nullptr;
  return guarded([&] {
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw spinbound::Error(spinbound::ErrorCode::kParse, e.what());
    }
    *text_out = dup(spinbound::format_text(doc));
  });
}

void sb_string_free(char* s) { std::free(s); }

const char* sb_last_error(void) { return g_last_error.c_str(); }

const char* sb_version(void) { return "0.1.0"; }

const char* sb_convention_version(void) { return spinbound::kConventionVersion; }

}  // extern "C"

#include "kkw/kkw.h"

#include "kkw/report.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

struct kkw_config {
  kkw::RunConfig c;
};

struct kkw_report {
  kkw::Report r;
};

namespace {

thread_local std::string g_error;

kkw_status fail(kkw_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

kkw_status ok() {
  g_error.clear();
  return KKW_OK;
}

template <class F>
kkw_status guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    return fail(KKW_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(KKW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KKW_ERR_INTERNAL, "unknown error");
  }
}

kkw_status render(const kkw::Report& r, const char* format, std::string& out) {
  std::string f = format ? format : "json";
  if (f == "json") out = kkw::to_json(r);
  else if (f == "markdown") out = kkw::to_markdown(r);
  else return fail(KKW_ERR_INVALID, "format must be json or markdown");
  return KKW_OK;
}

}  // namespace

extern "C" {

const char* kkw_version(void) { return kkw::kReportVersion; }

const char* kkw_last_error(void) { return g_error.c_str(); }

kkw_status kkw_config_new(kkw_config** out) {
  if (!out) return fail(KKW_ERR_NULL, "null output pointer");
  return guarded([&] {
    *out = new kkw_config();
    return ok();
  });
}

void kkw_config_free(kkw_config* cfg) { delete cfg; }

kkw_status kkw_config_set_dim(kkw_config* cfg, int dim) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  if (dim != 4 && dim != 6) return fail(KKW_ERR_INVALID, "dimension must be 4 or 6");
  cfg->c.dim = dim;
  return ok();
}

kkw_status kkw_config_set_task(kkw_config* cfg, const char* task) {
  if (!cfg || !task) return fail(KKW_ERR_NULL, "null argument");
  kkw::RunConfig probe = cfg->c;
  probe.task = task;
  probe.case_filter.clear();
  return guarded([&] {
    kkw::validate(probe);
    cfg->c.task = task;
    return ok();
  });
}

kkw_status kkw_config_set_case(kkw_config* cfg, const char* case_name) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  std::string s = case_name ? case_name : "";
  if (s.empty()) {
    cfg->c.case_filter.clear();
    return ok();
  }
  for (const char* k : {"aI", "aII", "aIII", "b", "c"})
    if (s == k) {
      cfg->c.case_filter = s;
      return ok();
    }
  return fail(KKW_ERR_INVALID, "case must be one of aI, aII, aIII, b, c");
}

kkw_status kkw_config_set_samples(kkw_config* cfg, int samples) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  if (samples < 1) return fail(KKW_ERR_INVALID, "samples must be positive");
  cfg->c.samples = samples;
  return ok();
}

kkw_status kkw_config_set_seed(kkw_config* cfg, uint64_t seed) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  cfg->c.seed = seed;
  return ok();
}

kkw_status kkw_config_set_substitute_constants(kkw_config* cfg, int on) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  cfg->c.substitute_constants = on != 0;
  return ok();
}

kkw_status kkw_config_set_timing(kkw_config* cfg, int on) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  cfg->c.timing = on != 0;
  return ok();
}

kkw_status kkw_config_validate(const kkw_config* cfg) {
  if (!cfg) return fail(KKW_ERR_NULL, "null config");
  return guarded([&] {
    kkw::validate(cfg->c);
    return ok();
  });
}

kkw_status kkw_run(const kkw_config* cfg, kkw_report** out) {
  if (!cfg || !out) return fail(KKW_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* r = new kkw_report();
    try {
      r->r = kkw::run(cfg->c);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
    return ok();
  });
}

void kkw_report_free(kkw_report* report) { delete report; }

int kkw_report_binding_pass(const kkw_report* report) {
  return report && report->r.binding_pass() ? 1 : 0;
}

size_t kkw_report_count(const kkw_report* report) { return report ? report->r.results.size() : 0; }

kkw_status kkw_report_result(const kkw_report* report, size_t index, kkw_result_view* out) {
  if (!report || !out) return fail(KKW_ERR_NULL, "null argument");
  if (index >= report->r.results.size()) return fail(KKW_ERR_OUT_OF_RANGE, "result index out of range");
  const auto& e = report->r.results[index];
  out->id = e.id.c_str();
  out->verdict = e.verdict.c_str();
  out->binding = e.binding ? 1 : 0;
  out->value = e.value.c_str();
  out->samples = e.samples;
  return ok();
}

kkw_status kkw_report_render(const kkw_report* report, const char* format, char** out) {
  if (!report || !out) return fail(KKW_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s;
    if (kkw_status st = render(report->r, format, s); st != KKW_OK) return st;
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return fail(KKW_ERR_INTERNAL, "out of memory");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return ok();
  });
}

kkw_status kkw_report_write(const kkw_report* report, const char* format, const char* path) {
  if (!report || !path) return fail(KKW_ERR_NULL, "null argument");
  return guarded([&] {
    std::string s;
    if (kkw_status st = render(report->r, format, s); st != KKW_OK) return st;
    std::ofstream f(path, std::ios::binary);
    if (!f) return fail(KKW_ERR_IO, std::string("cannot open ") + path);
    f << s;
    f.close();
    if (!f) return fail(KKW_ERR_IO, std::string("write failed: ") + path);
    return ok();
  });
}

void kkw_string_free(char* s) { std::free(s); }

}  // extern "C"

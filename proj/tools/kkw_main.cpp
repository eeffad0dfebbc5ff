#include "kkw/kkw.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct ConfigGuard {
  kkw_config* p = nullptr;
  ~ConfigGuard() { kkw_config_free(p); }
};

struct ReportGuard {
  kkw_report* p = nullptr;
  ~ReportGuard() { kkw_report_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for residue densities in dimensions 4 and 6"};
  std::string task_pos, task_opt, case_filter, format = "json", out;
  int dim = 4, samples = 32;
  std::uint64_t seed = 1;
  bool substitute = false, timing = false;

  app.add_option("TASK", task_pos, "traces, lemmas, psi, theorem, interior or all");
  app.add_option("--task", task_opt, "same as the positional task");
  app.add_option("--dim", dim, "manifold dimension, 4 or 6");
  app.add_option("--case", case_filter, "psi case filter: aI, aII, aIII, b, c");
  app.add_option("--samples", samples, "sample points per identity");
  app.add_option("--seed", seed, "base seed");
  app.add_flag("--substitute-constants", substitute, "substitute tr[id] and sphere areas");
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", out, "write the report to FILE instead of stdout");
  app.add_flag("--timing", timing, "record wall-clock millis (reports stop being byte-identical)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!task_pos.empty() && !task_opt.empty() && task_pos != task_opt) {
    std::cerr << "error: conflicting tasks '" << task_pos << "' and '" << task_opt << "'\n";
    return kExitUsage;
  }
  std::string task = !task_pos.empty() ? task_pos : (!task_opt.empty() ? task_opt : "all");

  ConfigGuard cfg;
  if (kkw_config_new(&cfg.p) != KKW_OK) {
    std::cerr << "error: " << kkw_last_error() << "\n";
    return kExitError;
  }
  auto usage = [](kkw_status s) {
    if (s == KKW_OK) return false;
    std::cerr << "error: " << kkw_last_error() << "\n";
    return true;
  };
  if (usage(kkw_config_set_dim(cfg.p, dim)) || usage(kkw_config_set_task(cfg.p, task.c_str())) ||
      usage(kkw_config_set_case(cfg.p, case_filter.c_str())) ||
      usage(kkw_config_set_samples(cfg.p, samples)) || usage(kkw_config_set_seed(cfg.p, seed)) ||
      usage(kkw_config_set_substitute_constants(cfg.p, substitute ? 1 : 0)) ||
      usage(kkw_config_set_timing(cfg.p, timing ? 1 : 0)) || usage(kkw_config_validate(cfg.p)))
    return kExitUsage;

  ReportGuard rep;
  if (kkw_run(cfg.p, &rep.p) != KKW_OK) {
    std::cerr << "error: " << kkw_last_error() << "\n";
    return kExitError;
  }

  if (!out.empty()) {
    if (kkw_report_write(rep.p, format.c_str(), out.c_str()) != KKW_OK) {
      std::cerr << "error: " << kkw_last_error() << "\n";
      return kExitError;
    }
    for (size_t i = 0; i < kkw_report_count(rep.p); ++i) {
      kkw_result_view v;
      kkw_report_result(rep.p, i, &v);
      std::cerr << (v.binding ? "[binding] " : "[info]    ") << v.verdict << "  " << v.id << "\n";
    }
  } else {
    char* text = nullptr;
    if (kkw_report_render(rep.p, format.c_str(), &text) != KKW_OK) {
      std::cerr << "error: " << kkw_last_error() << "\n";
      return kExitError;
    }
    std::fputs(text, stdout);
    kkw_string_free(text);
  }
  return kkw_report_binding_pass(rep.p) ? kExitPass : kExitFail;
}

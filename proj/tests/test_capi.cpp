#include "doctest.h"

#include "kkw/kkw.h"

#include <string>

namespace {

struct Config {
  kkw_config* p = nullptr;
  Config() { REQUIRE(kkw_config_new(&p) == KKW_OK); }
  ~Config() { kkw_config_free(p); }
};

std::string render(const kkw_report* r, const char* format) {
  char* s = nullptr;
  REQUIRE(kkw_report_render(r, format, &s) == KKW_OK);
  std::string out = s;
  kkw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("null arguments report KKW_ERR_NULL") {
  CHECK(kkw_config_new(nullptr) == KKW_ERR_NULL);
  CHECK(kkw_config_set_dim(nullptr, 4) == KKW_ERR_NULL);
  CHECK(kkw_config_set_task(nullptr, "all") == KKW_ERR_NULL);
  CHECK(kkw_config_validate(nullptr) == KKW_ERR_NULL);
  CHECK(kkw_run(nullptr, nullptr) == KKW_ERR_NULL);
  CHECK(std::string(kkw_last_error()) != "");
  CHECK(kkw_report_binding_pass(nullptr) == 0);
  CHECK(kkw_report_count(nullptr) == 0);
  kkw_config_free(nullptr);
  kkw_report_free(nullptr);
}

TEST_CASE("invalid settings report KKW_ERR_INVALID and keep the old value") {
  Config c;
  CHECK(kkw_config_set_dim(c.p, 5) == KKW_ERR_INVALID);
  CHECK(kkw_config_set_task(c.p, "everything") == KKW_ERR_INVALID);
  CHECK(kkw_config_set_case(c.p, "d") == KKW_ERR_INVALID);
  CHECK(kkw_config_set_samples(c.p, 0) == KKW_ERR_INVALID);
  CHECK(kkw_config_validate(c.p) == KKW_OK);
  CHECK(std::string(kkw_last_error()).empty());

  CHECK(kkw_config_set_task(c.p, "theorem") == KKW_OK);
  CHECK(kkw_config_set_case(c.p, "b") == KKW_OK);
  CHECK(kkw_config_validate(c.p) == KKW_ERR_INVALID);
  CHECK(kkw_config_set_task(c.p, "psi") == KKW_OK);
  CHECK(kkw_config_validate(c.p) == KKW_OK);
  CHECK(kkw_config_set_case(c.p, nullptr) == KKW_OK);
}

TEST_CASE("run, inspect and render a report") {
  Config c;
  REQUIRE(kkw_config_set_task(c.p, "theorem") == KKW_OK);
  REQUIRE(kkw_config_set_samples(c.p, 2) == KKW_OK);
  kkw_report* r = nullptr;
  REQUIRE(kkw_run(c.p, &r) == KKW_OK);
  CHECK(kkw_report_binding_pass(r) == 1);
  REQUIRE(kkw_report_count(r) > 0);

  kkw_result_view v;
  REQUIRE(kkw_report_result(r, 0, &v) == KKW_OK);
  CHECK(std::string(v.id) == "dim4/theorem/total");
  CHECK(std::string(v.verdict) == "holds");
  CHECK(v.binding == 1);
  CHECK(std::string(v.value) == "0");
  CHECK(v.samples == 2);
  CHECK(kkw_report_result(r, kkw_report_count(r), &v) == KKW_ERR_OUT_OF_RANGE);

  std::string json = render(r, "json");
  CHECK(json.find("\"version\"") != std::string::npos);
  CHECK(json.find("\"dim4/theorem/total\"") != std::string::npos);
  CHECK(render(r, "markdown").find("| dim4/theorem/total |") != std::string::npos);
  char* s = nullptr;
  CHECK(kkw_report_render(r, "xml", &s) == KKW_ERR_INVALID);
  CHECK(s == nullptr);
  CHECK(kkw_report_write(r, "json", "/nonexistent-dir/report.json") == KKW_ERR_IO);

  kkw_report* again = nullptr;
  REQUIRE(kkw_run(c.p, &again) == KKW_OK);
  CHECK(render(again, "json") == json);
  kkw_report_free(again);
  kkw_report_free(r);
}

TEST_CASE("a failing binding check clears binding_pass") {
  Config c;
  REQUIRE(kkw_config_set_task(c.p, "lemmas") == KKW_OK);
  REQUIRE(kkw_config_set_samples(c.p, 1) == KKW_OK);
  kkw_report* r = nullptr;
  REQUIRE(kkw_run(c.p, &r) == KKW_OK);
  CHECK(kkw_report_binding_pass(r) == 0);
  kkw_report_free(r);
}

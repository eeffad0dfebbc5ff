#ifndef KKW_H
#define KKW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kkw_status {
  KKW_OK = 0,
  KKW_ERR_NULL = 1,         /* a required pointer argument is null */
  KKW_ERR_INVALID = 2,      /* invalid configuration value */
  KKW_ERR_INTERNAL = 3,     /* engine failure; see kkw_last_error */
  KKW_ERR_IO = 4,           /* file could not be written */
  KKW_ERR_OUT_OF_RANGE = 5  /* result index past the end */
} kkw_status;

typedef struct kkw_config kkw_config;
typedef struct kkw_report kkw_report;

/* Version string of the report schema. */
const char* kkw_version(void);

/* Message of the last failing call on this thread, or "". */
const char* kkw_last_error(void);

kkw_status kkw_config_new(kkw_config** out);
void kkw_config_free(kkw_config* cfg);

kkw_status kkw_config_set_dim(kkw_config* cfg, int dim);
/* traces, lemmas, psi, theorem, interior, all */
kkw_status kkw_config_set_task(kkw_config* cfg, const char* task);
/* aI, aII, aIII, b, c; null or "" clears the filter */
kkw_status kkw_config_set_case(kkw_config* cfg, const char* case_name);
kkw_status kkw_config_set_samples(kkw_config* cfg, int samples);
kkw_status kkw_config_set_seed(kkw_config* cfg, uint64_t seed);
kkw_status kkw_config_set_substitute_constants(kkw_config* cfg, int on);
kkw_status kkw_config_set_timing(kkw_config* cfg, int on);
/* Checks the combination of settings without running. */
kkw_status kkw_config_validate(const kkw_config* cfg);

kkw_status kkw_run(const kkw_config* cfg, kkw_report** out);
void kkw_report_free(kkw_report* report);

/* 1 if every binding check holds, 0 otherwise. */
int kkw_report_binding_pass(const kkw_report* report);
size_t kkw_report_count(const kkw_report* report);

typedef struct kkw_result_view {
  const char* id;
  const char* verdict; /* holds, fails, computed */
  int binding;
  const char* value;
  int samples;
} kkw_result_view;

/* Pointers stay valid until the report is freed. */
kkw_status kkw_report_result(const kkw_report* report, size_t index, kkw_result_view* out);

/* format: "json" or "markdown"; *out is owned by the caller, release with kkw_string_free. */
kkw_status kkw_report_render(const kkw_report* report, const char* format, char** out);
kkw_status kkw_report_write(const kkw_report* report, const char* format, const char* path);
void kkw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

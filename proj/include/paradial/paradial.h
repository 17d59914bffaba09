// include/paradial/paradial.h

// Copyright 2026  The paradial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PARADIAL_PARADIAL_H_
#define PARADIAL_PARADIAL_H_

#include <stddef.h>

#if defined(PDL_BUILDING_LIBRARY)
#define PDL_API __attribute__((visibility("default")))
#else
#define PDL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdl_status {
  PDL_OK = 0,
  PDL_ERR_USAGE = 1,       /* bad argument, option or command */
  PDL_ERR_VALIDATION = 2,  /* input data violates a contract */
  PDL_ERR_IO = 3,          /* file could not be read or written */
  PDL_ERR_FORMAT = 4,      /* malformed JSON or record */
  PDL_ERR_INTERNAL = 5
} pdl_status;

/* A run configuration plus the result of the last command. Not thread-safe;
   use one session per thread. */
typedef struct pdl_session pdl_session;

PDL_API const char* pdl_version(void);
PDL_API const char* pdl_status_string(pdl_status status);

/* Message of the last failed call on this thread. Never NULL. */
PDL_API const char* pdl_last_error(void);

PDL_API size_t pdl_command_count(void);
PDL_API const char* pdl_command_name(size_t i);

PDL_API pdl_session* pdl_session_create(void);
PDL_API void pdl_session_destroy(pdl_session* s);

/* Settings from a JSON file or string are applied on top of the current
   ones. */
PDL_API pdl_status pdl_session_load_config_file(pdl_session* s,
                                                const char* path);
PDL_API pdl_status pdl_session_load_config_json(pdl_session* s,
                                                const char* json);

/* Named scalar setting, e.g. ("seed", "7") or ("tau_hl", "0.44"). */
PDL_API pdl_status pdl_session_set_option(pdl_session* s, const char* name,
                                          const char* value);

/* File path for a role such as "annotations" or "report". NULL or "" clears
   the role. */
PDL_API pdl_status pdl_session_set_path(pdl_session* s, const char* role,
                                        const char* path);

/* Appends a strategy in colon syntax (fixed:N, agree:N:MAX,
   entropy:T:MIN:MAX). */
PDL_API pdl_status pdl_session_add_strategy(pdl_session* s, const char* spec);
PDL_API void pdl_session_clear_strategies(pdl_session* s);

/* Effective configuration as JSON. Valid until the next call on s. */
PDL_API const char* pdl_session_config_json(pdl_session* s);

/* Runs a subcommand. Results below refer to the last successful run. */
PDL_API pdl_status pdl_run(pdl_session* s, const char* command);

PDL_API const char* pdl_result_summary(const pdl_session* s);
PDL_API const char* pdl_result_document(const pdl_session* s);
/* Output meant for stdout when no output file was configured. */
PDL_API const char* pdl_result_stdout(const pdl_session* s);
PDL_API size_t pdl_result_warning_count(const pdl_session* s);
PDL_API const char* pdl_result_warning(const pdl_session* s, size_t i);
PDL_API size_t pdl_result_written_count(const pdl_session* s);
PDL_API const char* pdl_result_written(const pdl_session* s, size_t i);

/* Single metrics. Word sets are arrays of indices; duplicates are ignored. */
PDL_API pdl_status pdl_jaccard(const size_t* a, size_t na, const size_t* b,
                               size_t nb, double* out);
PDL_API pdl_status pdl_entropy_binary(size_t positive, size_t total,
                                      double* out);

/* cells is row-major n_items x n_raters with -1 for missing, else 0 or 1.
   *defined is 0 when alpha is undefined. */
PDL_API pdl_status pdl_alpha_nominal(const int* cells, size_t n_items,
                                     size_t n_raters, double* out,
                                     int* defined);

/* Writes up to capacity matched word indices. *n_out gets the full count and
   *matched is 0 when the quote does not match. */
PDL_API pdl_status pdl_match_quote(const char* quote, const char* source,
                                   size_t max_gap, double min_coverage,
                                   size_t* indices, size_t capacity,
                                   size_t* n_out, int* matched);

#ifdef __cplusplus
}
#endif

#endif  /* PARADIAL_PARADIAL_H_ */

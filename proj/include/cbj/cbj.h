// Copyright 2026 The cbj Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the cbj search engines.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cbj_status; on failure cbj_last_error()
 * describes the problem (thread-local, valid until the next failing call
 * on the same thread). */

#ifndef CBJ_CBJ_H
#define CBJ_CBJ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CBJ_API __declspec(dllexport)
#else
#define CBJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cbj_instance cbj_instance;
typedef struct cbj_outcome cbj_outcome;

typedef enum cbj_status {
  CBJ_OK = 0,
  CBJ_ERR_ARGUMENT = 1,         /* null pointer, bad enum, out-of-range index */
  CBJ_ERR_PARSE = 2,            /* malformed instance text */
  CBJ_ERR_INVALID_INSTANCE = 3, /* well-formed text, inconsistent data */
  CBJ_ERR_IO = 4,
  CBJ_ERR_TOO_LARGE = 5,        /* oracle tuple cap exceeded */
  CBJ_ERR_BUFFER = 6,           /* caller buffer too small */
  CBJ_ERR_INTERNAL = 7
} cbj_status;

typedef enum cbj_strategy {
  CBJ_STRATEGY_CHRONO = 0,
  CBJ_STRATEGY_ALG1 = 1,
  CBJ_STRATEGY_ALG2 = 2
} cbj_strategy;

typedef enum cbj_mode {
  CBJ_MODE_FIRST = 0,
  CBJ_MODE_ALL = 1,
  CBJ_MODE_LIMIT = 2 /* stop after cbj_solve_options.solution_limit solutions */
} cbj_mode;

typedef enum cbj_termination {
  CBJ_TERM_FIRST_FOUND = 0,
  CBJ_TERM_EXHAUSTED = 1,
  CBJ_TERM_UNSATISFIABLE = 2,
  CBJ_TERM_LIMIT_REACHED = 3
} cbj_termination;

typedef struct cbj_stats {
  uint64_t trials;
  uint64_t consistency_checks;
  uint64_t local_conflicts;
  uint64_t exhaustions;
  uint64_t backjumps;
  uint64_t solutions;
} cbj_stats;

#define CBJ_UNLIMITED UINT64_MAX

/* Receives one trace line (no trailing newline) per search event. */
typedef void (*cbj_trace_fn)(const char* line, void* user);

typedef struct cbj_solve_options {
  cbj_strategy strategy;
  cbj_mode mode;
  uint64_t solution_limit; /* CBJ_MODE_LIMIT only, >= 1 */
  uint64_t max_trials;     /* CBJ_UNLIMITED for no guard */
  cbj_trace_fn trace;      /* may be NULL */
  void* trace_user;
} cbj_solve_options;

CBJ_API const char* cbj_last_error(void);
CBJ_API const char* cbj_status_name(cbj_status status);

/* Instances */
CBJ_API cbj_status cbj_instance_paper(size_t var_card, size_t value_card, cbj_instance** out);
CBJ_API cbj_status cbj_instance_queens(size_t n, cbj_instance** out);
CBJ_API cbj_status cbj_instance_parse(const char* text, cbj_instance** out);
CBJ_API cbj_status cbj_instance_load(const char* path, cbj_instance** out);
/* Writes a NUL-terminated string owned by the caller; free with cbj_string_free. */
CBJ_API cbj_status cbj_instance_serialize(const cbj_instance* instance, char** out_text);
CBJ_API size_t cbj_instance_var_count(const cbj_instance* instance);
CBJ_API void cbj_instance_free(cbj_instance* instance);

/* Search */
CBJ_API void cbj_solve_options_init(cbj_solve_options* options);
CBJ_API cbj_status cbj_solve(const cbj_instance* instance, const cbj_solve_options* options,
                             cbj_outcome** out);
/* Generate-and-test reference enumeration; the outcome carries no stats. */
CBJ_API cbj_status cbj_enumerate_all(const cbj_instance* instance, uint64_t tuple_cap,
                                     cbj_outcome** out);

CBJ_API cbj_status cbj_outcome_stats(const cbj_outcome* outcome, cbj_stats* out);
CBJ_API cbj_termination cbj_outcome_termination(const cbj_outcome* outcome);
CBJ_API size_t cbj_outcome_solution_count(const cbj_outcome* outcome);
/* Copies the values of solution `index`, ordered by ascending variable id,
 * into `values`. `capacity` must be at least the instance's var_count. */
CBJ_API cbj_status cbj_outcome_solution(const cbj_outcome* outcome, size_t index,
                                        int32_t* values, size_t capacity);
/* 1 when both outcomes hold the same ordered solution list, else 0. */
CBJ_API int cbj_outcome_same_solutions(const cbj_outcome* a, const cbj_outcome* b);
/* 1 when the first solution embeds two distinct n-queens placements in the
 * odd and even variables (paper_problem(2n, n) layout), else 0. */
CBJ_API int cbj_outcome_first_contains_queens(const cbj_outcome* outcome);
CBJ_API void cbj_outcome_free(cbj_outcome* outcome);

/* Formatting */
CBJ_API const char* cbj_strategy_name(cbj_strategy strategy);
CBJ_API const char* cbj_termination_name(cbj_termination termination);
/* key=value lines (json == 0) or a one-line JSON object (json != 0). */
CBJ_API cbj_status cbj_format_stats(const cbj_stats* stats, cbj_termination termination,
                                    int json, char** out_text);
CBJ_API void cbj_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CBJ_CBJ_H */

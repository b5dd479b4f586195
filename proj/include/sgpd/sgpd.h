/*
 *   Copyright 2026 The sgpd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the sgpd library.  Every object is an opaque handle owned
 * by the caller and released with its _free function.  Functions return an
 * sgpd_status; on failure sgpd_last_error() describes the cause for the
 * calling thread. */

#ifndef SGPD_SGPD_H_
#define SGPD_SGPD_H_

#include <stddef.h>

#if defined(SGPD_BUILDING_LIBRARY)
#  define SGPD_API __attribute__((visibility("default")))
#else
#  define SGPD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgpd_status {
  SGPD_OK = 0,
  SGPD_E_PARSE,
  SGPD_E_INVALID_ARGUMENT,
  SGPD_E_MALFORMED_TABLE,
  SGPD_E_UNKNOWN_ELEMENT,
  SGPD_E_NOT_COMPOSABLE,
  SGPD_E_CANDIDATE_NOT_SUBSET,
  SGPD_E_NOT_A_COVERING,
  SGPD_E_BOUND_EXCEEDED,
  SGPD_E_EMPTY_ALPHABET,
  SGPD_E_INADMISSIBLE_WORD,
  SGPD_E_UNKNOWN_LETTER,
  SGPD_E_SPRING_ROW,
  SGPD_E_INCONSISTENT_SQUARES,
  SGPD_E_BAD_SPLIT,
  SGPD_E_DEGREE_OUT_OF_RANGE,
  SGPD_E_DIMENSION_MISMATCH,
  SGPD_E_PRECONDITION_UNMET,
  SGPD_E_NOT_A_CATEGORY,
  SGPD_E_DEGENERATE_REPRESENTATION,
  SGPD_E_SOURCES_PRESENT,
  SGPD_E_INCOMPATIBLE_GENERATORS,
  SGPD_E_BOUNDARY_ELEMENT,
  SGPD_E_NULL_ARGUMENT = 100,
  SGPD_E_INTERNAL      = 101
} sgpd_status;

typedef enum sgpd_despring_mode {
  SGPD_DESPRING_FINEST    = 0,
  SGPD_DESPRING_UNIVERSAL = 1
} sgpd_despring_mode;

/* A semigroupoid together with the structure it was built from. */
typedef struct sgpd_source sgpd_source;
/* Outcome of one command: key-value lines, prose and an exit code. */
typedef struct sgpd_report sgpd_report;

SGPD_API const char* sgpd_version(void);
SGPD_API const char* sgpd_status_name(sgpd_status status);
SGPD_API const char* sgpd_last_error(void);

/* Reads a whole file into a buffer released with sgpd_string_free. */
SGPD_API sgpd_status sgpd_read_file(const char* path, char** out);
SGPD_API void        sgpd_string_free(char* s);

/* Sources.  Text arguments hold .sgpd, .mat01 and .kgr content; degrees are
 * comma-separated, as in "2,2". */
SGPD_API sgpd_status sgpd_source_from_sgpd(const char* text, sgpd_source** out);
SGPD_API sgpd_status sgpd_source_from_mat01(const char*   text,
                                            size_t        max_len,
                                            sgpd_source** out);
SGPD_API sgpd_status sgpd_source_from_kgr(const char*   text,
                                          const char*   max_degree,
                                          sgpd_source** out);
SGPD_API void        sgpd_source_free(sgpd_source* src);

SGPD_API size_t      sgpd_source_size(const sgpd_source* src);
SGPD_API const char* sgpd_source_name(const sgpd_source* src, size_t i);
SGPD_API sgpd_status sgpd_source_find(const sgpd_source* src, const char* name, size_t* out);
/* Writes the index of f g, or fails with SGPD_E_NOT_COMPOSABLE. */
SGPD_API sgpd_status sgpd_source_compose(const sgpd_source* src,
                                         size_t             f,
                                         size_t             g,
                                         size_t*            out);

/* Commands.  Each writes a fresh report on success. */
SGPD_API sgpd_status sgpd_run_validate(const char* sgpd_text, sgpd_report** out);
SGPD_API sgpd_status sgpd_run_analyze(const sgpd_source* src, sgpd_report** out);
SGPD_API sgpd_status sgpd_run_despring(const sgpd_source* src,
                                       sgpd_despring_mode mode,
                                       sgpd_report**      out);
SGPD_API sgpd_status sgpd_run_markov(const char*   mat01_text,
                                     size_t        max_len,
                                     int           graphable,
                                     sgpd_report** out);
SGPD_API sgpd_status sgpd_run_kgraph(const char*   kgr_text,
                                     const char*   max_degree,
                                     sgpd_report** out);
SGPD_API sgpd_status sgpd_run_covers(const sgpd_source* src,
                                     const char* const* F,
                                     size_t             nF,
                                     const char* const* G,
                                     size_t             nG,
                                     size_t             max_size,
                                     sgpd_report**      out);
SGPD_API sgpd_status sgpd_run_rep_check(const sgpd_source* src,
                                        const char*        rep_text,
                                        int                tight,
                                        size_t             max_fg,
                                        size_t             max_cover,
                                        sgpd_report**      out);
/* style is "generic", "ck" or "kp"; rep_text may be NULL. */
SGPD_API sgpd_status sgpd_run_relations(const sgpd_source* src,
                                        const char*        style,
                                        int                toeplitz,
                                        size_t             max_fg,
                                        size_t             max_cover,
                                        const char*        rep_text,
                                        sgpd_report**      out);

/* Report strings stay valid until the report is freed. */
SGPD_API int         sgpd_report_exit_code(const sgpd_report* r);
SGPD_API const char* sgpd_report_machine(const sgpd_report* r);
SGPD_API const char* sgpd_report_human(const sgpd_report* r);
SGPD_API const char* sgpd_report_json(const sgpd_report* r);
/* Value of a machine key, or NULL. */
SGPD_API const char* sgpd_report_get(const sgpd_report* r, const char* key);
SGPD_API void        sgpd_report_free(sgpd_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SGPD_SGPD_H_ */

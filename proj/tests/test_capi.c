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

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sgpd/sgpd.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* fix_f = "elements: f g h m\ncompose: f g -> m\ncompose: f h -> m\n";

static void test_source(void) {
  sgpd_source* src = NULL;
  size_t       f = 0, g = 0, m = 0, out = 0;
  EXPECT(sgpd_source_from_sgpd(fix_f, &src) == SGPD_OK);
  EXPECT(sgpd_source_size(src) == 4);
  EXPECT(strcmp(sgpd_source_name(src, 3), "m") == 0);
  EXPECT(sgpd_source_name(src, 4) == NULL);
  EXPECT(sgpd_source_find(src, "f", &f) == SGPD_OK);
  EXPECT(sgpd_source_find(src, "g", &g) == SGPD_OK);
  EXPECT(sgpd_source_find(src, "m", &m) == SGPD_OK);
  EXPECT(sgpd_source_compose(src, f, g, &out) == SGPD_OK && out == m);
  EXPECT(sgpd_source_compose(src, g, f, &out) == SGPD_E_NOT_COMPOSABLE);
  EXPECT(strstr(sgpd_last_error(), "not composable") != NULL);
  EXPECT(sgpd_source_find(src, "zz", &out) == SGPD_E_UNKNOWN_ELEMENT);
  sgpd_source_free(src);
}

static void test_errors(void) {
  sgpd_source* src = NULL;
  sgpd_report* rep = NULL;
  EXPECT(sgpd_source_from_sgpd("elements: a\ncompose: a b -> a\n", &src) == SGPD_E_PARSE);
  EXPECT(src == NULL);
  EXPECT(strstr(sgpd_last_error(), "line 2") != NULL);
  EXPECT(sgpd_source_from_sgpd("elements: a b\ncompose: a a -> b\n", &src)
         == SGPD_E_MALFORMED_TABLE);
  EXPECT(sgpd_source_from_sgpd(NULL, &src) == SGPD_E_NULL_ARGUMENT);
  EXPECT(sgpd_source_from_mat01("0\n", 3, &src) == SGPD_E_EMPTY_ALPHABET);
  EXPECT(sgpd_run_kgraph("k: 2\nobjects: v\n", "2", &rep) == SGPD_E_DEGREE_OUT_OF_RANGE);
  EXPECT(strcmp(sgpd_status_name(SGPD_E_BOUND_EXCEEDED), "BoundExceeded") == 0);
  EXPECT(strcmp(sgpd_status_name(SGPD_OK), "OK") == 0);
  {
    char* text = NULL;
    EXPECT(sgpd_read_file("/nonexistent/x.sgpd", &text) == SGPD_E_INVALID_ARGUMENT);
  }
}

static void test_validate(void) {
  sgpd_report* rep = NULL;
  EXPECT(sgpd_run_validate(fix_f, &rep) == SGPD_OK);
  EXPECT(sgpd_report_exit_code(rep) == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "associative"), "yes") == 0);
  EXPECT(sgpd_report_get(rep, "no_such_key") == NULL);
  EXPECT(strstr(sgpd_report_json(rep), "\"associative\": \"yes\"") != NULL);
  sgpd_report_free(rep);

  EXPECT(sgpd_run_validate("elements: a b c ab bc abc\n"
                           "compose: a b -> ab\ncompose: b c -> bc\ncompose: a bc -> abc\n",
                           &rep)
         == SGPD_OK);
  EXPECT(sgpd_report_exit_code(rep) == 1);
  EXPECT(strcmp(sgpd_report_get(rep, "violation_triple"), "(a,b,c)") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "violation_pair"), "(ab,c)") == 0);
  sgpd_report_free(rep);
}

static void test_markov(void) {
  sgpd_report* rep = NULL;
  EXPECT(sgpd_run_markov("2\n1 1\n1 0\n", 3, 1, &rep) == SGPD_OK);
  EXPECT(sgpd_report_exit_code(rep) == 1);
  EXPECT(strcmp(sgpd_report_get(rep, "words"), "10") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "obstruction"), "i=2,j=1,i2=1,j2=2") == 0);
  sgpd_report_free(rep);
}

static void test_tight(void) {
  sgpd_source* src = NULL;
  sgpd_report* rep = NULL;
  EXPECT(sgpd_source_from_sgpd("elements: f\n", &src) == SGPD_OK);
  EXPECT(sgpd_run_rep_check(src, "dim: 2\nf = [[0,1],[0,0]]\n", 1, 2, 6, &rep) == SGPD_OK);
  EXPECT(sgpd_report_exit_code(rep) == 1);
  EXPECT(strcmp(sgpd_report_get(rep, "axioms"), "pass") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "witness_F"), "{f}") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "witness_G"), "{}") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "witness_H"), "{}") == 0);
  sgpd_report_free(rep);
  EXPECT(sgpd_run_rep_check(src, "dim: 2\nf = [[0,1]]\n", 1, 2, 6, &rep)
         == SGPD_E_DIMENSION_MISMATCH);
  sgpd_source_free(src);
}

static void test_kgraph_source(void) {
  sgpd_source* src = NULL;
  sgpd_report* rep = NULL;
  const char*  F[] = {"v"};
  EXPECT(sgpd_source_from_kgr("k: 1\nobjects: v\nedge: e 1 v v\n", "3", &src) == SGPD_OK);
  EXPECT(sgpd_source_size(src) == 4);
  EXPECT(sgpd_run_covers(src, F, 1, NULL, 0, 2, &rep) == SGPD_OK);
  EXPECT(strcmp(sgpd_report_get(rep, "target"), "{v,e,ee}") == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "covering.1"), "{v}") == 0);
  sgpd_report_free(rep);
  EXPECT(sgpd_run_relations(src, "kp", 0, 2, 6, "dim: 1\nv = [[1]]\ne = [[1]]\n", &rep)
         == SGPD_OK);
  EXPECT(sgpd_report_exit_code(rep) == 0);
  EXPECT(strcmp(sgpd_report_get(rep, "discrepancy"), "no") == 0);
  sgpd_report_free(rep);
  EXPECT(sgpd_run_relations(src, "ck", 0, 2, 6, NULL, &rep) == SGPD_E_INVALID_ARGUMENT);
  sgpd_source_free(src);
}

int main(void) {
  test_source();
  test_errors();
  test_validate();
  test_markov();
  test_tight();
  test_kgraph_source();
  if (failures != 0) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}

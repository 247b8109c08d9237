// Copyright 2026 The qautk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QAUTK_QAUTK_H_
#define QAUTK_QAUTK_H_

/* C interface to qautk. Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a status code; on failure a message describing
 * the problem is available from qautk_last_error() on the same thread. Strings returned
 * through char** out-parameters are allocated by the library and released with
 * qautk_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(QAUTK_BUILDING_LIBRARY)
#define QAUTK_API __attribute__((visibility("default")))
#else
#define QAUTK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qautk_status {
  QAUTK_OK = 0,
  QAUTK_INVALID_ARGUMENT = 1,
  QAUTK_PARSE_ERROR = 2,
  QAUTK_DOMAIN_ERROR = 3,
  QAUTK_INTERNAL_ERROR = 4
} qautk_status;

typedef struct qautk_matrix qautk_matrix;
typedef struct qautk_report qautk_report;

QAUTK_API const char* qautk_version(void);

/* Message for the most recent failing call on this thread; "" if none. */
QAUTK_API const char* qautk_last_error(void);

QAUTK_API void qautk_string_free(char* s);

/* Integer matrices. The text format is "rows cols" followed by the entries in row-major order. */
QAUTK_API qautk_status qautk_matrix_parse(const char* text, qautk_matrix** out);
QAUTK_API qautk_status qautk_matrix_from_int64(size_t rows, size_t cols, const int64_t* entries,
                                               qautk_matrix** out);
QAUTK_API size_t qautk_matrix_rows(const qautk_matrix* m);
QAUTK_API size_t qautk_matrix_cols(const qautk_matrix* m);
/* Decimal representation of entry (r, c). */
QAUTK_API qautk_status qautk_matrix_entry(const qautk_matrix* m, size_t r, size_t c, char** out);
QAUTK_API qautk_status qautk_matrix_to_text(const qautk_matrix* m, char** out);
QAUTK_API void qautk_matrix_free(qautk_matrix* m);

/* The K_0-level boundary map for block sizes dims[0..n-1]. */
QAUTK_API qautk_status qautk_boundary_matrix(const uint64_t* dims, size_t n, qautk_matrix** out);

/* Smith normal form U A V = S. Any of the outputs may be NULL. */
QAUTK_API qautk_status qautk_smith_normal_form(const qautk_matrix* a, qautk_matrix** s, qautk_matrix** u,
                                               qautk_matrix** v);

/* Runs a named command on JSON inputs. Commands: ktheory, closed-form, verify, boundary,
 * resolution-check, snf, delta-form, twisted-group, extract-torsion, magic-rank, sweep. */
QAUTK_API qautk_status qautk_run(const char* command, const char* inputs_json, qautk_report** out);

/* Shorthands for qautk_run("ktheory" / "verify", {"dims": [...]}). */
QAUTK_API qautk_status qautk_ktheory(const uint64_t* dims, size_t n, qautk_report** out);
QAUTK_API qautk_status qautk_verify(const uint64_t* dims, size_t n, qautk_report** out);

QAUTK_API size_t qautk_command_count(void);
QAUTK_API const char* qautk_command_name(size_t i);

/* 1 when the computation confirmed the expected statement, 0 otherwise. */
QAUTK_API int qautk_report_passed(const qautk_report* r);
/* Report as JSON text; pretty-printed with the given indent, or compact when indent < 0. */
QAUTK_API qautk_status qautk_report_json(const qautk_report* r, int indent, char** out);
QAUTK_API size_t qautk_report_warning_count(const qautk_report* r);
/* Borrowed pointer valid for the lifetime of the report. */
QAUTK_API const char* qautk_report_warning(const qautk_report* r, size_t i);
QAUTK_API void qautk_report_free(qautk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* QAUTK_QAUTK_H_ */

/*
   Copyright 2026 The sympair Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of the sympair shared library.
 *
 * Repeated-root cyclic codes over odd prime fields, exact minimum Hamming
 * and symbol-pair distances, MDS/AMDS classification against the
 * Singleton-type bound d_p <= n-k+2, and the registry of published table
 * rows the workbench re-verifies.
 *
 * Conventions: handles are opaque and freed with the matching *_free
 * function; every fallible call returns a sympair_status, with the most
 * recent failure message per thread available via sympair_last_error();
 * strings returned through char** are heap-allocated and released with
 * sympair_string_free().
 */

#ifndef SYMPAIR_H
#define SYMPAIR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sympair_code sympair_code;
typedef struct sympair_report sympair_report;

typedef enum sympair_status {
    SYMPAIR_OK = 0,
    SYMPAIR_ERR_INVALID_ARGUMENT = 1,
    SYMPAIR_ERR_MODULUS_MISMATCH = 2,
    SYMPAIR_ERR_DIVISION_BY_ZERO = 3,
    SYMPAIR_ERR_NO_SUCH_ROOT = 4,     /* l does not divide p-1 */
    SYMPAIR_ERR_BAD_SPEC = 5,         /* code-construction constraint violated */
    SYMPAIR_ERR_MULTIPLICITY = 6,     /* exponent above the family bound p-1 */
    SYMPAIR_ERR_TOO_LARGE = 7,        /* enumeration cap exceeded */
    SYMPAIR_ERR_PARSE = 8,
    SYMPAIR_ERR_INTERNAL = 9          /* engine self-check failed */
} sympair_status;

typedef enum sympair_class {
    SYMPAIR_CLASS_MDS = 0,     /* d_p = n-k+2 */
    SYMPAIR_CLASS_AMDS = 1,    /* d_p = n-k+1 */
    SYMPAIR_CLASS_NEITHER = 2
} sympair_class;

typedef enum sympair_method {
    SYMPAIR_METHOD_FULL_ENUM = 0,
    SYMPAIR_METHOD_SUPPORT_SEARCH = 1
} sympair_method;

typedef struct sympair_options {
    int64_t full_enum_cap;     /* max messages full enumeration may visit (default 10^7) */
    int64_t nullspace_cap;     /* max projective kernel candidates per support (default 10^6) */
    int workers;               /* parallel workers (default 1); results are schedule-independent */
    int64_t full_enum_threshold; /* analyze prefers full enumeration below this (default 10^5) */
} sympair_options;

void sympair_options_default(sympair_options* opts);

const char* sympair_status_name(sympair_status status);
const char* sympair_class_name(sympair_class cls);
const char* sympair_method_name(sympair_method method);

/* Thread-local message describing the most recent failure. */
const char* sympair_last_error(void);

void sympair_string_free(char* s);

/* ---- code construction ------------------------------------------------- */

/* Parse {"p":..,"l":..,"factors":[{"unity_exp":u,"mult":m}|{"elem":a,"mult":m}
   |{"poly":[c0,c1,1],"mult":m}],"omega":w?} and build the code. */
sympair_status sympair_code_from_json(const char* json_text, sympair_code** out);

/* Length-3p family (x-1)^r1 (x-w)^r2 (x-w^2)^r3; omega 0 picks the canonical
   root of unity of order 3 (requires p = 1 mod 3). */
sympair_status sympair_code_3p(int64_t p, int r1, int r2, int r3, int64_t omega,
                               sympair_code** out);

/* General inline form: (x-1)^r1 (x-w)^r2 (x-w^2)^r3 with w of order l. */
sympair_status sympair_code_powers(int64_t p, int64_t l, int r1, int r2, int r3, int64_t omega,
                                   sympair_code** out);

void sympair_code_free(sympair_code* code);

int64_t sympair_code_p(const sympair_code* code);
int64_t sympair_code_l(const sympair_code* code);
int64_t sympair_code_n(const sympair_code* code);
int64_t sympair_code_k(const sympair_code* code);
int64_t sympair_code_omega(const sympair_code* code); /* 0 when no root of unity is used */

/* Generator coefficients, low degree first; *out_len <- deg(g)+1. */
sympair_status sympair_code_generator(const sympair_code* code, int64_t* buf, size_t buf_len,
                                      size_t* out_len);

sympair_status sympair_code_to_json(const sympair_code* code, int indent, char** out);

/* result <- 1 iff the length-n word is in the code. */
sympair_status sympair_code_contains(const sympair_code* code, const int64_t* word, size_t len,
                                     int* result);

/* Pair weight of an arbitrary word (length >= 2). */
sympair_status sympair_pair_weight(const int64_t* word, size_t len, int* out);

/* ---- analysis ----------------------------------------------------------- */

/* Exact d_H (two independent algorithms, cross-checked), exact d_p, and the
   classification. opts may be NULL for defaults. */
sympair_status sympair_analyze(const sympair_code* code, const sympair_options* opts,
                               sympair_report** out);

void sympair_report_free(sympair_report* report);

int sympair_report_d_hamming(const sympair_report* report);
int sympair_report_d_pair(const sympair_report* report);
sympair_class sympair_report_classification(const sympair_report* report);
sympair_method sympair_report_method(const sympair_report* report);
uint64_t sympair_report_supports_examined(const sympair_report* report);
double sympair_report_elapsed_ms(const sympair_report* report);

#define SYMPAIR_WITNESS_HAMMING 0
#define SYMPAIR_WITNESS_PAIR 1

/* Length-n codeword attaining the reported minimum weight. */
sympair_status sympair_report_witness(const sympair_report* report, int which, int64_t* buf,
                                      size_t buf_len, size_t* out_len);

sympair_status sympair_report_to_json(const sympair_report* report, const sympair_code* code,
                                      int indent, char** out);

/* ---- published-rows registry -------------------------------------------- */

size_t sympair_registry_count(void);
const char* sympair_registry_row_id(size_t index);
const char* sympair_registry_row_table(size_t index);
int64_t sympair_registry_row_p(size_t index);
sympair_status sympair_registry_row_json(size_t index, int indent, char** out);

/* Analyze the row's code and compare against the published expectation.
   pass <- 1 on agreement (INFO rows always pass). Optional JSON detail and
   CSV line (see sympair_registry_csv_header for the column order). */
sympair_status sympair_registry_verify(size_t index, const sympair_options* opts, int* pass,
                                       char** json_detail, char** csv_line);

const char* sympair_registry_csv_header(void);

/* ---- length-3p scan helper ---------------------------------------------- */

/* Sufficient MDS conditions of the length-3p theorem on an exponent triple
   (normalization is applied internally). Returns 0/1. */
int sympair_mds3p_condition(int r1, int r2, int r3);

#ifdef __cplusplus
}
#endif

#endif /* SYMPAIR_H */

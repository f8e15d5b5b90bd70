// Copyright 2026 The covlll Authors
//
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

/* C interface to libcovlll: covering-array bounds from the Lovász Local Lemma
 * under the tiled probability model, tiled random sampling, exhaustive
 * verification and Moser-Tardos construction.
 *
 * Conventions:
 *  - Every function returns a covlll_status. On failure a message is
 *    available from covlll_last_error() on the same thread.
 *  - Strings returned through char** are heap-allocated by the library and
 *    must be released with covlll_string_free().
 *  - covlll_matrix is an opaque, immutable-once-returned handle released with
 *    covlll_matrix_free().
 *  - k = 0 selects the i.i.d. model wherever a bound is requested.
 */

#ifndef COVLLL_COVLLL_H_
#define COVLLL_COVLLL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COVLLL_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define COVLLL_API __attribute__((visibility("default")))
#else
#define COVLLL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covlll_status {
  COVLLL_OK = 0,
  COVLLL_E_INVALID_ARGUMENT = 1,
  COVLLL_E_PARSE = 2,
  COVLLL_E_WORK_BOUND = 3,
  COVLLL_E_CONSTRUCTION_FAILED = 4,
  COVLLL_E_IO = 5,
  COVLLL_E_INTERNAL = 6
} covlll_status;

typedef enum covlll_degree_mode {
  COVLLL_DEGREE_EXACT = 0, /* d+1 = t*C(m-1,t-1) + 1 */
  COVLLL_DEGREE_RELAXED = 1 /* d+1 <= t*m^(t-1)/(t-1)! */
} covlll_degree_mode;

typedef struct covlll_matrix covlll_matrix;

typedef struct covlll_estimate {
  uint64_t trials;
  uint64_t hits;
  double estimate;
  double std_error;
  double exact; /* NaN when no exact reference exists */
  double z;
} covlll_estimate;

typedef struct covlll_coverage {
  uint64_t covered;
  uint64_t total;
  uint64_t min_witness;
} covlll_coverage;

COVLLL_API const char* covlll_version(void);
COVLLL_API const char* covlll_last_error(void);
COVLLL_API const char* covlll_status_name(covlll_status status);
COVLLL_API void covlll_string_free(char* str);

/* ---- bounds ---------------------------------------------------------- */

/* gamma_k as a reduced fraction of decimal strings. */
COVLLL_API covlll_status covlll_gamma(int alpha, int t, int k, char** num,
                                      char** den);

/* Multiplier of log2(m); k = 0 gives the i.i.d. baseline. */
COVLLL_API covlll_status covlll_coefficient(int alpha, int t, int k,
                                            double* out);

/* k = 1 closed form, evaluated without gamma. */
COVLLL_API covlll_status covlll_coefficient_closed_form(int alpha, int t,
                                                        double* out);

COVLLL_API covlll_status covlll_dependency_degree_plus_one(
    int m, int t, covlll_degree_mode mode, double* out);

/* n counts core columns and must be a positive multiple of k*alpha. */
COVLLL_API covlll_status covlll_lll_check(int m, int t, int alpha, int k,
                                          int64_t n, covlll_degree_mode mode,
                                          int* satisfied, double* product);

/* Smallest total width (core + augmentation) passing the LLL condition. */
COVLLL_API covlll_status covlll_sufficient_n(int m, int t, int alpha, int k,
                                             covlll_degree_mode mode,
                                             int64_t* out);

/* JSON bound report. m <= 0 omits the m-dependent fields (they are null). */
COVLLL_API covlll_status covlll_bound_report_json(int m, int t, int alpha,
                                                  int k,
                                                  covlll_degree_mode mode,
                                                  char** json);

/* The 32-row table of N/log2(m) coefficients, as text or JSON. */
COVLLL_API covlll_status covlll_table_text(char** text);
COVLLL_API covlll_status covlll_table_json(char** json);

/* ---- matrices -------------------------------------------------------- */

COVLLL_API covlll_status covlll_matrix_sample_tiled(int m, int alpha,
                                                    int n_core, int k,
                                                    int augment, uint64_t seed,
                                                    covlll_matrix** out);
COVLLL_API covlll_status covlll_matrix_sample_iid(int m, int alpha, int n,
                                                  uint64_t seed,
                                                  covlll_matrix** out);
/* Row-major entries in [1, alpha]. */
COVLLL_API covlll_status covlll_matrix_from_entries(int m, int n, int alpha,
                                                    const int* entries,
                                                    covlll_matrix** out);
COVLLL_API covlll_status covlll_matrix_parse(const char* text,
                                             covlll_matrix** out);
COVLLL_API covlll_status covlll_matrix_format(const covlll_matrix* matrix,
                                              char** text);
COVLLL_API covlll_status covlll_matrix_load(const char* path,
                                            covlll_matrix** out);
COVLLL_API covlll_status covlll_matrix_save(const covlll_matrix* matrix,
                                            const char* path);
COVLLL_API void covlll_matrix_free(covlll_matrix* matrix);

COVLLL_API int covlll_matrix_rows(const covlll_matrix* matrix);
COVLLL_API int covlll_matrix_cols(const covlll_matrix* matrix);
COVLLL_API int covlll_matrix_alpha(const covlll_matrix* matrix);
/* Letter at (row, col), or 0 when out of range. */
COVLLL_API int covlll_matrix_at(const covlll_matrix* matrix, int row, int col);

/* ---- verification ---------------------------------------------------- */

/* naive != 0 selects the per-vector column scan instead of hashing. */
COVLLL_API covlll_status covlll_verify(const covlll_matrix* matrix, int t,
                                       int naive, int* is_covering);
/* JSON lines: up to `limit` missing tuples (0 = all), then a summary. */
COVLLL_API covlll_status covlll_missing_tuples_jsonl(
    const covlll_matrix* matrix, int t, uint64_t limit, char** jsonl);
COVLLL_API covlll_status covlll_coverage_stats(const covlll_matrix* matrix,
                                               int t, covlll_coverage* out);

/* ---- construction ---------------------------------------------------- */

/* n <= 0 uses covlll_sufficient_n; max_resamples == 0 uses 100*C(m,t).
 * Returns COVLLL_E_CONSTRUCTION_FAILED when resampling runs out; *log_json
 * is filled in both cases and *out only on success. */
COVLLL_API covlll_status covlll_construct(int m, int t, int alpha, int k,
                                          int64_t n, uint64_t seed,
                                          uint64_t max_resamples,
                                          int record_trace,
                                          covlll_matrix** out,
                                          char** log_json);

/* ---- Monte-Carlo oracles --------------------------------------------- */

/* work_bound == 0 uses the default (10^7, or $COVLLL_WORK_BOUND). */
COVLLL_API covlll_status covlll_enumerate_gamma(int alpha, int t, int k,
                                                uint64_t work_bound,
                                                char** num, char** den);
/* target may be NULL for <1,...,1>; otherwise t letters. */
COVLLL_API covlll_status covlll_estimate_gamma(int alpha, int t, int k,
                                               uint64_t trials, uint64_t seed,
                                               const int* target, int threads,
                                               covlll_estimate* out);
COVLLL_API covlll_status covlll_estimate_lambda(int t, int alpha, int k,
                                                int n_core, uint64_t trials,
                                                uint64_t seed, int threads,
                                                covlll_estimate* out);
/* CSV header / one row for an estimate; columns
 * quantity,m,t,alpha,k,n_core,trials,estimate,stderr,exact,z */
COVLLL_API const char* covlll_estimate_csv_header(void);
COVLLL_API covlll_status covlll_estimate_csv_row(const char* quantity, int m,
                                                 int t, int alpha, int k,
                                                 int n_core,
                                                 const covlll_estimate* est,
                                                 char** row);
COVLLL_API covlll_status covlll_empirical_min_n_json(int m, int t, int alpha,
                                                     int k, uint64_t trials,
                                                     uint64_t seed,
                                                     char** json);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  /* COVLLL_COVLLL_H_ */

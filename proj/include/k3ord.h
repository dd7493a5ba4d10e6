/*
 * Copyright 2026 k3ord authors
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
 */

/*
 * C interface to the k3ord library: ordinary/supersingular reduction of
 * quartic K3 surfaces via finite-field point counts and Newton polygons.
 *
 * Conventions:
 *   - every fallible call returns a k3ord_status; K3ORD_OK means success
 *   - on failure, k3ord_last_error() describes the problem (thread-local)
 *   - char** outputs receive NUL-terminated text owned by the caller,
 *     released with k3ord_string_free(); they are key=value lines unless
 *     documented as JSON or CSV
 *   - handle outputs are released with the matching *_free function
 *   - budget = 0 selects the default evaluation budget (2^31 points),
 *     threads/workers = 0 select single-threaded execution
 */
#ifndef K3ORD_H
#define K3ORD_H

#include <stdint.h>

#ifndef K3ORD_API
#if defined(_WIN32)
#ifdef K3ORD_BUILDING_SHARED
#define K3ORD_API __declspec(dllexport)
#else
#define K3ORD_API __declspec(dllimport)
#endif
#else
#define K3ORD_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k3ord_status {
  K3ORD_OK = 0,
  K3ORD_ERR_INVALID_ARGUMENT = 1,
  K3ORD_ERR_PARSE = 2,
  K3ORD_ERR_DEGENERATE = 3,
  K3ORD_ERR_BUDGET = 4,
  K3ORD_ERR_IO = 5,
  K3ORD_ERR_INCONSISTENT = 6,
  K3ORD_ERR_INTERNAL = 7
} k3ord_status;

typedef enum k3ord_verdict {
  K3ORD_VERDICT_ORDINARY = 0,
  K3ORD_VERDICT_NON_ORDINARY = 1,
  K3ORD_VERDICT_BAD_REDUCTION = 2
} k3ord_verdict;

typedef enum k3ord_height_kind {
  K3ORD_HEIGHT_ORDINARY = 0,
  K3ORD_HEIGHT_FINITE = 1,
  K3ORD_HEIGHT_SUPERSINGULAR = 2,
  K3ORD_HEIGHT_INVALID = 3,
  K3ORD_HEIGHT_CANDIDATES = 4 /* partial input; candidate list in the text */
} k3ord_height_kind;

typedef struct k3ord_surface k3ord_surface;
typedef struct k3ord_poly k3ord_poly;
typedef struct k3ord_scan_report k3ord_scan_report;

K3ORD_API const char* k3ord_version(void);
K3ORD_API const char* k3ord_status_name(k3ord_status status);

/* message of the most recent failure on this thread; empty if none */
K3ORD_API const char* k3ord_last_error(void);

K3ORD_API void k3ord_string_free(char* text);

/* ---- surfaces ---------------------------------------------------------- */

K3ORD_API k3ord_status k3ord_surface_from_file(const char* path, k3ord_surface** out);
K3ORD_API k3ord_status k3ord_surface_from_json(const char* text, k3ord_surface** out);
K3ORD_API const char* k3ord_surface_name(const k3ord_surface* s);
K3ORD_API void k3ord_surface_free(k3ord_surface* s);

/* #X(F_{p^n}) via the fast counter; out lines: q, count, s1, and for n = 1
 * also a1 and a1_mod_p */
K3ORD_API k3ord_status k3ord_count_points(const k3ord_surface* s, uint64_t p, uint32_t n,
                                          unsigned threads, uint64_t budget, char** out);

/* reduce mod p, scan for singular points to `depth`, count over F_p, decide;
 * out lines include reason/depth_scanned/count/s1/a1_mod_p as applicable */
K3ORD_API k3ord_status k3ord_is_ordinary(const k3ord_surface* s, uint64_t p, uint32_t depth,
                                         unsigned threads, uint64_t budget,
                                         k3ord_verdict* verdict, char** out);

/* power sums s_1..s_max_n over F_{p^n}; when max_n >= 11 a reconstruction of
 * the degree-22 polynomial is attempted (s_12 disambiguates if available) */
K3ORD_API k3ord_status k3ord_zeta(const k3ord_surface* s, uint64_t p, uint32_t max_n,
                                  unsigned threads, uint64_t budget, char** out);

/* same, starting from a power-sum JSON document instead of counting */
K3ORD_API k3ord_status k3ord_zeta_from_sums(const char* sums_json, char** out);

/* ---- prime-range scans ------------------------------------------------- */

K3ORD_API k3ord_status k3ord_scan_run(const k3ord_surface* s, uint64_t p_min, uint64_t p_max,
                                      uint32_t depth, unsigned workers, uint64_t budget,
                                      int use_naive_counter, k3ord_scan_report** out);
K3ORD_API k3ord_status k3ord_scan_report_csv(const k3ord_scan_report* rep, char** out);
K3ORD_API k3ord_status k3ord_scan_report_summary(const k3ord_scan_report* rep, char** out /* JSON */);
K3ORD_API void k3ord_scan_report_free(k3ord_scan_report* rep);

/* ---- Frobenius polynomials --------------------------------------------- */

K3ORD_API k3ord_status k3ord_poly_from_file(const char* path, k3ord_poly** out);
K3ORD_API k3ord_status k3ord_poly_from_json(const char* text, k3ord_poly** out);
K3ORD_API int k3ord_poly_is_partial(const k3ord_poly* P);
K3ORD_API void k3ord_poly_free(k3ord_poly* P);

/* clause-by-clause report (a..e); pass = 1 when everything holds */
K3ORD_API k3ord_status k3ord_validate(const k3ord_poly* P, int* pass, char** out);

/* points, hull vertices, and the 22 exact slopes */
K3ORD_API k3ord_status k3ord_newton_polygon(const k3ord_poly* P, char** out);

/* full input: the height class (h valid for ORDINARY/FINITE).  Partial
 * input: kind = K3ORD_HEIGHT_CANDIDATES and the candidate list in out. */
K3ORD_API k3ord_status k3ord_classify(const k3ord_poly* P, k3ord_height_kind* kind, unsigned* h,
                                      char** out);

/* exact cyclotomic factorization test; yes = 1 iff supersingular */
K3ORD_API k3ord_status k3ord_supersingular(const k3ord_poly* P, int* yes, char** out);

/* trace-rigidity check of the polynomial against primes p and ell > 44 */
K3ORD_API k3ord_status k3ord_ogus_rigidity(const k3ord_poly* P, uint64_t p, uint64_t ell,
                                           int* hypotheses_hold, int* conclusion_holds,
                                           char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* K3ORD_H */

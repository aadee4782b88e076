// Copyright 2026 The cofsieve Authors
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

/* C interface to the cofsieve library.
 *
 * Inputs are text in the same syntaxes the command-line tool accepts:
 * partitions "4,2,1", skew shapes "4,4,3,1/3,1", compositions "8,2,2",
 * permutations "(1234)" or "2,3,1", vertical-strip tuples "3/0,3/1".
 *
 * Every function returns a cofs_status. On failure the message is available
 * from cofs_last_error() on the same thread until the next call. Strings
 * returned through char** are owned by the caller and released with
 * cofs_string_free(); handles are released with their *_free function. */
#ifndef COFSIEVE_COFSIEVE_H_
#define COFSIEVE_COFSIEVE_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define COFS_API __declspec(dllexport)
#else
#define COFS_API __attribute__((visibility("default")))
#endif

typedef enum {
  COFS_OK = 0,
  COFS_ERR_PARSE = 1,    /* malformed input text */
  COFS_ERR_DOMAIN = 2,   /* well-formed input outside the domain of the operation */
  COFS_ERR_INTERNAL = 3  /* anything else, e.g. allocation failure */
} cofs_status;

typedef enum { COFS_BASIS_MONOMIAL = 0, COFS_BASIS_SCHUR = 1 } cofs_basis;
typedef enum { COFS_FORMAT_TEXT = 0, COFS_FORMAT_JSON = 1, COFS_FORMAT_DOT = 2 } cofs_format;

typedef struct cofs_sympoly cofs_sympoly;
typedef struct cofs_report cofs_report;

COFS_API const char* cofs_version(void);
COFS_API const char* cofs_last_error(void);
COFS_API void cofs_string_free(char* s);

/* ---- symmetric polynomials ---- */

/* E_{shape}(x_1..x_m; q, 0) in the monomial basis. With conjugate != 0 the
 * shape is conjugated first (λ/μ becomes λ'/μ'). */
COFS_API cofs_status cofs_macdonald_e(const char* shape, int m, int conjugate, cofs_sympoly** out);
/* Vertical-strip LLT polynomial in m variables, monomial basis. */
COFS_API cofs_status cofs_llt(const char* strips, int m, cofs_sympoly** out);
/* Q'_mu(x; q) in the Schur basis with m variables. */
COFS_API cofs_status cofs_transformed_hl(const char* mu, int m, cofs_sympoly** out);

COFS_API cofs_status cofs_sympoly_convert(const cofs_sympoly* f, cofs_basis basis, cofs_sympoly** out);
COFS_API cofs_status cofs_sympoly_format(const cofs_sympoly* f, cofs_format format, char** out);
COFS_API int cofs_sympoly_num_terms(const cofs_sympoly* f);
COFS_API void cofs_sympoly_free(cofs_sympoly* f);

/* ---- scalar queries ---- */

/* K_{lambda,mu}(q) as text, e.g. "q + 2*q^2 + q^3". */
COFS_API cofs_status cofs_kostka_foulkes(const char* lambda, const char* mu, char** out);
COFS_API cofs_status cofs_mininv(const char* strips, int* out);

/* ---- structures ---- */

/* Orbits of phi (rotation of column sets in blocks of n columns) on
 * COF(n*base, m), restricted to a content when content is non-NULL. */
COFS_API cofs_status cofs_orbits(const char* base, int n, int m, const char* content,
                                 cofs_format format, char** out);
/* Crystal graph on COF(shape, m); format is DOT or JSON. */
COFS_API cofs_status cofs_crystal(const char* shape, int m, cofs_format format, char** out);
/* Reads a Burge word (JSON {"top":[..],"bottom":[..]} or two text lines) and
 * returns its RSK pair (P, Q). */
COFS_API cofs_status cofs_rsk(const char* word, cofs_format format, char** out);

/* ---- verification reports ---- */

/* Cyclic sieving on COF(n*base, m) with f = E(1^m; q, 0); base may be skew. */
COFS_API cofs_status cofs_csp_main(const char* base, int n, int m, cofs_report** out);
/* Fillings of n*base with the given content, f = the monomial coefficient. */
COFS_API cofs_status cofs_csp_refined(const char* base, int n, const char* content, cofs_report** out);
/* The action of a permutation of the values on COF(shape, m). */
COFS_API cofs_status cofs_csp_sigma(const char* shape, int m, const char* sigma, cofs_report** out);
/* E_{shape'} = q^{-mininv} LLT for a skew shape with at most two cells per column. */
COFS_API cofs_status cofs_llt_theorem(const char* shape, int m, cofs_report** out);
/* E_lambda = omega Q'_{lambda'} in m variables. */
COFS_API cofs_status cofs_e_as_hl(const char* lambda, int m, cofs_report** out);

COFS_API int cofs_report_passed(const cofs_report* r);
/* 0 when the hypotheses of the checked statement do not hold. */
COFS_API int cofs_report_applicable(const cofs_report* r);
COFS_API cofs_status cofs_report_format(const cofs_report* r, cofs_format format, char** out);
COFS_API void cofs_report_free(cofs_report* r);

#ifdef __cplusplus
}
#endif

#endif  /* COFSIEVE_COFSIEVE_H_ */

/* Copyright 2026 The ffhyper Authors
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

/* C interface to the ffhyper library: finite fields F_q, exact cyclotomic
 * values, multiplicative/additive characters and Gauss sums, the finite field
 * A-hypergeometric function F_A and its companion exponential sum S_A, the
 * McCarthy kF_{k-1} specialization, and the self-verification suites.
 *
 * Conventions:
 *  - field elements travel as their integer encoding sum c_i p^i in [0, q);
 *  - characters travel as exponents relative to the canonical generator;
 *  - every function returns an ffh_status; results go through out-parameters;
 *  - strings returned through char** are owned by the caller and must be
 *    released with ffh_string_free;
 *  - on failure ffh_last_error() describes the problem (thread-local).
 */

#ifndef FFHYPER_H
#define FFHYPER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef long long ffh_int;

/* Status codes; the CLI uses the same values as process exit codes. */
typedef enum ffh_status {
  FFH_OK = 0,
  FFH_CHECK_FAILED = 1,
  FFH_PARSE_ERROR = 2,
  FFH_BAD_ARGUMENT = 3,
  FFH_LIMIT_EXCEEDED = 4,
  FFH_INTERNAL_ERROR = 5
} ffh_status;

typedef struct ffh_field ffh_field;       /* F_q descriptor (immutable) */
typedef struct ffh_value ffh_value;       /* exact element of Q(zeta_m) */
typedef struct ffh_instance ffh_instance; /* (A, beta) with field and lambda */

/* Thread-local message for the most recent failure in this thread. */
const char* ffh_last_error(void);
void ffh_string_free(char* s);

/* ---- finite fields ---- */

/* Builds F_{p^a}; q is bounded by FFHYPER_QMAX (default 2^20). */
ffh_status ffh_field_create(ffh_int p, ffh_int a, ffh_field** out);
void ffh_field_free(ffh_field* field);
ffh_int ffh_field_q(const ffh_field* field);
ffh_int ffh_field_generator(const ffh_field* field);
/* {p, a, modulus: [c0..ca], generator: [c0..c_{a-1}]} */
ffh_status ffh_field_to_json(const ffh_field* field, char** json_out);
/* kind is one of add, mul, neg, inv, pow; y is the second operand encoding,
 * or the exponent for pow (ignored by neg and inv). */
ffh_status ffh_field_element_op(const ffh_field* field, const char* kind, ffh_int x, ffh_int y,
                                ffh_int* out);
ffh_status ffh_field_discrete_log(const ffh_field* field, ffh_int x, ffh_int* out);
ffh_status ffh_field_trace(const ffh_field* field, ffh_int x, ffh_int* out);

/* ---- cyclotomic values ---- */

void ffh_value_free(ffh_value* value);
ffh_status ffh_value_root_of_unity(ffh_int m, ffh_int k, ffh_value** out);
/* kind add/mul take v (or the integer scalar when v is NULL); neg ignores
 * both; scalar_div divides by the integer scalar. */
ffh_status ffh_value_op(const char* kind, const ffh_value* u, const ffh_value* v, ffh_int scalar,
                        ffh_value** out);
/* {m, den, coeffs: [...]} */
ffh_status ffh_value_to_json(const ffh_value* value, char** json_out);
ffh_status ffh_value_to_complex(const ffh_value* value, double* re, double* im);
/* 1 when equal, 0 when not (conductors are reconciled first). */
int ffh_value_equal(const ffh_value* u, const ffh_value* v);

/* ---- characters and Gauss sums ---- */

/* chi_k(x); x must be nonzero. */
ffh_status ffh_mult_char_eval(const ffh_field* field, ffh_int k, ffh_int x, ffh_value** out);
/* Psi_c(x) = zeta_p^{Tr(c x)}; c must be nonzero. */
ffh_status ffh_additive_char_eval(const ffh_field* field, ffh_int c, ffh_int x, ffh_value** out);
ffh_status ffh_gauss_sum(const ffh_field* field, ffh_int k, ffh_int c, ffh_value** out);
/* Whether g'(chi_k) = conj(chi_k)(c) g(chi_k) for the twist by c != 0;
 * holds identically and serves as a first-class oracle.  *out gets 1/0. */
ffh_status ffh_twist_relation_check(const ffh_field* field, ffh_int k, ffh_int c, int* out);

/* ---- hypergeometric instances ---- */

/* Parses {field:{p,a}, A:[[...]], beta:[...], lambda:[...], twist: enc?}. */
ffh_status ffh_instance_parse(const char* json, ffh_instance** out);
void ffh_instance_free(ffh_instance* instance);
ffh_status ffh_instance_to_json(const ffh_instance* instance, char** json_out);
/* Solution set of prod chi_i^{a_i} = beta:
 * {count, particular?, kernel: [{generator, order}...]}. */
ffh_status ffh_solve_character_lattice(const ffh_instance* instance, char** json_out);
/* F_A / S_A at the instance's lambda; twist encoding 0 uses the instance's. */
ffh_status ffh_eval_hypergeometric(const ffh_instance* instance, ffh_int twist, ffh_value** out);
ffh_status ffh_eval_exponential_sum(const ffh_instance* instance, ffh_int twist, ffh_value** out);
/* Closed-form Fourier coefficient at the character tuple rho (length N). */
ffh_status ffh_fourier_coefficient(const ffh_instance* instance, const ffh_int* rho, size_t len,
                                   ffh_int twist, ffh_value** out);

/* ---- McCarthy kF_{k-1} ---- */

/* alphas holds 2k-1 character exponents; t is a nonzero element encoding. */
ffh_status ffh_mccarthy(const ffh_field* field, const ffh_int* alphas, size_t len, ffh_int t,
                        ffh_value** out);
ffh_status ffh_mccarthy_normalization(const ffh_field* field, const ffh_int* alphas, size_t len,
                                      ffh_value** out);
/* Instance document whose F_A specializes to kF_{k-1}(alphas | t): rows are
 * the unit vectors plus (1,..,1,-1,..,-1), beta the conjugated/plain alphas,
 * lambda = (1,..,1,(-1)^k t).  Ready for ffh_instance_parse / ffh_cmd_eval. */
ffh_status ffh_mccarthy_instance(const ffh_field* field, const ffh_int* alphas, size_t len,
                                 ffh_int t, char** json_out);
/* Whether C * kF_{k-1}(alphas | t) equals the direct exponential sum of the
 * specialized instance; holds identically.  *out gets 1/0. */
ffh_status ffh_mccarthy_specialization_check(const ffh_field* field, const ffh_int* alphas,
                                             size_t len, ffh_int t, int* out);

/* ---- report-level commands (JSON reports; status mirrors exit codes) ---- */

ffh_status ffh_cmd_eval(const char* instance_json, const char* which, ffh_int twist_or_zero,
                        char** report_json);
ffh_status ffh_cmd_mccarthy(ffh_int q, const ffh_int* alphas, size_t len, ffh_int t, int table,
                            char** report_json);
ffh_status ffh_cmd_verify(const char* suite, ffh_int qmax, unsigned long long seed,
                          char** report_json);
/* Table view (t,re,im,check) of a report produced by the commands above. */
ffh_status ffh_report_to_csv(const char* report_json, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* FFHYPER_H */

/* Copyright 2026 The modseq Authors.
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

/* C interface to libmodseq.
 *
 * Every fallible call returns a modseq_status; on failure the message is
 * available from modseq_last_error() on the calling thread until the next
 * call. Handles are opaque and owned by the caller; strings returned through
 * char** are released with modseq_string_free. */

#ifndef MODSEQ_MODSEQ_H_
#define MODSEQ_MODSEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MODSEQ_BUILDING_LIBRARY)
#define MODSEQ_API __attribute__((visibility("default")))
#else
#define MODSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MODSEQ_OK = 0,
  MODSEQ_ERR_USAGE = 1,     /* invalid argument or precondition */
  MODSEQ_ERR_RESOURCE = 2,  /* a materialization or order cap was hit */
  MODSEQ_ERR_BUFFER = 3,    /* caller buffer too small; required size reported */
  MODSEQ_ERR_INTERNAL = 4
} modseq_status;

#define MODSEQ_MAX_ELL 64

MODSEQ_API const char* modseq_version(void);
MODSEQ_API const char* modseq_last_error(void);
MODSEQ_API const char* modseq_status_name(modseq_status status);
MODSEQ_API void modseq_string_free(char* s);

/* Caps on primitive order and on materialized entries. NULL means defaults. */
typedef struct {
  uint64_t max_order;
  uint64_t max_length;
} modseq_limits;

MODSEQ_API modseq_limits modseq_default_limits(void);

/* ---- modular arithmetic ---- */

/* *infinite is set for x == 0, otherwise *v receives nu_p(x). */
MODSEQ_API modseq_status modseq_valuation(int64_t x, uint64_t p, int* infinite, unsigned* v);
MODSEQ_API modseq_status modseq_kummer_valuation(uint64_t n, uint64_t s, uint64_t p,
                                                 unsigned* borrows);
/* exact != 0 selects big-integer evaluation. */
MODSEQ_API modseq_status modseq_binom_mod(uint64_t n, uint64_t s, uint64_t m, int exact,
                                          uint64_t* out);
/* Base-p digits least significant first. *count receives the digit count. */
MODSEQ_API modseq_status modseq_digits(uint64_t n, uint64_t p, unsigned* buf, size_t cap,
                                       size_t* count);
MODSEQ_API modseq_status modseq_digits_string(uint64_t n, uint64_t p, char** out);
/* Usage error unless m = p^ell with ell >= 1. */
MODSEQ_API modseq_status modseq_prime_power(uint64_t m, uint64_t* p, unsigned* ell);

/* ---- periodic sequences ---- */

typedef struct modseq_seq modseq_seq;
typedef struct modseq_seq_list modseq_seq_list;

MODSEQ_API modseq_status modseq_seq_from_values(uint64_t modulus, const int64_t* values,
                                                size_t count, modseq_seq** out);
/* {"modulus":12,"period":[2,1,2,4,8,1,8,4]} */
MODSEQ_API modseq_status modseq_seq_from_record(const char* record, modseq_seq** out);
MODSEQ_API modseq_seq* modseq_seq_clone(const modseq_seq* f);
MODSEQ_API void modseq_seq_free(modseq_seq* f);

MODSEQ_API uint64_t modseq_seq_modulus(const modseq_seq* f);
MODSEQ_API size_t modseq_seq_period(const modseq_seq* f);
MODSEQ_API int modseq_seq_equal(const modseq_seq* f, const modseq_seq* g);
MODSEQ_API int modseq_seq_is_zero(const modseq_seq* f);
/* Copies one minimal period; *count receives the period length. */
MODSEQ_API modseq_status modseq_seq_values(const modseq_seq* f, uint64_t* buf, size_t cap,
                                           size_t* count);
MODSEQ_API modseq_status modseq_seq_to_record(const modseq_seq* f, char** out);
/* "[2,1] mod 3" */
MODSEQ_API modseq_status modseq_seq_to_string(const modseq_seq* f, char** out);

MODSEQ_API modseq_status modseq_seq_shift(const modseq_seq* f, uint64_t j, modseq_seq** out);
MODSEQ_API modseq_status modseq_seq_delta(const modseq_seq* f, modseq_seq** out);
MODSEQ_API modseq_status modseq_seq_sigma(const modseq_seq* f, uint64_t c, modseq_seq** out);
MODSEQ_API modseq_status modseq_seq_primitive(const modseq_seq* f, uint64_t s,
                                              const modseq_limits* limits, modseq_seq** out);
MODSEQ_API modseq_status modseq_seq_add(const modseq_seq* f, const modseq_seq* g,
                                        modseq_seq** out);
MODSEQ_API modseq_status modseq_seq_scalar_mul(uint64_t c, const modseq_seq* f,
                                               modseq_seq** out);
MODSEQ_API uint64_t modseq_seq_trace(const modseq_seq* f);

/* Line-delimited records; errors name the line and field. */
MODSEQ_API modseq_status modseq_records_parse(const char* text, modseq_seq_list** out);
MODSEQ_API modseq_status modseq_seq_p_parts(const modseq_seq* f, modseq_seq_list** out);
MODSEQ_API modseq_seq_list* modseq_seq_list_new(void);
/* Appends a copy of f. */
MODSEQ_API modseq_status modseq_seq_list_push(modseq_seq_list* list, const modseq_seq* f);
MODSEQ_API size_t modseq_seq_list_size(const modseq_seq_list* list);
/* Borrowed; valid while the list lives. */
MODSEQ_API const modseq_seq* modseq_seq_list_at(const modseq_seq_list* list, size_t i);
MODSEQ_API void modseq_seq_list_free(modseq_seq_list* list);
MODSEQ_API modseq_status modseq_seq_crt(const modseq_seq_list* parts, modseq_seq** out);

/* ---- structure ---- */

typedef enum {
  MODSEQ_KIND_IDEMPOTENT = 0,
  MODSEQ_KIND_NILPOTENT = 1,
  MODSEQ_KIND_MIXED = 2
} modseq_kind;

MODSEQ_API const char* modseq_kind_name(int kind);

typedef struct {
  uint64_t u;
  uint64_t m;
  uint64_t t;
  uint64_t kbar;
  uint64_t idempotency_index;
  uint64_t nilpotency_index; /* 0 when the nilpotent part is zero */
} modseq_split_info;

/* Either output handle may be NULL when not wanted. */
MODSEQ_API modseq_status modseq_split(const modseq_seq* f, modseq_split_info* info,
                                      modseq_seq** idempotent, modseq_seq** nilpotent);
MODSEQ_API modseq_status modseq_classify(const modseq_seq* f, int* kind);

/* Pure sequences over a prime-power ring only. *count receives eta;
 * *leading is -1 for the zero vector. */
MODSEQ_API modseq_status modseq_generating_vector(const modseq_seq* f, int* kind,
                                                  uint64_t* buf, size_t cap, size_t* count,
                                                  int64_t* leading);

typedef struct {
  uint64_t predicted_period;
  uint64_t valid_from;
  uint64_t leading_index;
  uint64_t leading_value;
  int kind;
  int advisory; /* s below valid_from */
} modseq_prediction;

MODSEQ_API modseq_status modseq_predict_period(const modseq_seq* f, uint64_t s,
                                               modseq_prediction* out);
MODSEQ_API modseq_status modseq_predict_period_constant(uint64_t p, unsigned ell, uint64_t c,
                                                        uint64_t s, uint64_t* period);

typedef struct {
  uint64_t p;
  unsigned ell;
  int kind;
  int has_prediction; /* 0 for mixed parts */
  modseq_prediction prediction;
} modseq_part_prediction;

/* Any modulus: one entry per prime, in increasing order. *period is 0 when
 * some part is mixed. */
MODSEQ_API modseq_status modseq_predict_period_composite(const modseq_seq* f, uint64_t s,
                                                         modseq_part_prediction* parts,
                                                         size_t cap, size_t* count,
                                                         uint64_t* period, int* advisory);

/* ---- binomial sequences ---- */

typedef struct {
  uint64_t s;
  uint64_t p;
  unsigned ell;
  uint64_t period;
  uint64_t zeros;
  uint64_t pi[MODSEQ_MAX_ELL];
} modseq_stats;

typedef enum {
  MODSEQ_LEMMA_ALL_TOP = 0,  /* window (p-1)^ell */
  MODSEQ_LEMMA_ALL_ZERO = 1, /* window 0^ell */
  MODSEQ_LEMMA_TOP_ZEROS = 2 /* window (p-1) 0^{ell-1} */
} modseq_lemma;

typedef enum { MODSEQ_OP_ALT = 0, MODSEQ_OP_DOUBLE = 1 } modseq_operator;

MODSEQ_API const char* modseq_lemma_name(int lemma);
MODSEQ_API const char* modseq_operator_name(int op);

typedef struct {
  int lemma;
  int m;
  unsigned k;
  uint64_t s;
  uint64_t s_prime;
  unsigned deleted_digit;
  int op;
  unsigned scale_exponent;
  int has_e_size;
  uint64_t e_size;
} modseq_step;

typedef struct modseq_chain modseq_chain;

MODSEQ_API modseq_status modseq_bin_seq(uint64_t p, unsigned ell, uint64_t s,
                                        const modseq_limits* limits, modseq_seq** out);
MODSEQ_API modseq_status modseq_double_seq(const modseq_seq* f, uint64_t q, unsigned t,
                                           modseq_seq** out);
MODSEQ_API modseq_status modseq_alt_seq(const modseq_seq* f, uint64_t q, unsigned t,
                                        modseq_seq** out);
MODSEQ_API modseq_status modseq_nu_equiv(const modseq_seq* f, const modseq_seq* g,
                                         int* equivalent);
MODSEQ_API modseq_status modseq_seq_stats(const modseq_seq* f, modseq_stats* out);
/* Materializes bin_s. */
MODSEQ_API modseq_status modseq_binom_stats(uint64_t p, unsigned ell, uint64_t s,
                                            const modseq_limits* limits, modseq_stats* out);
MODSEQ_API modseq_status modseq_find_reductions(uint64_t p, unsigned ell, uint64_t s,
                                                modseq_step* buf, size_t cap, size_t* count);
MODSEQ_API modseq_status modseq_apply_reduction(uint64_t p, unsigned ell,
                                                const modseq_step* step,
                                                const modseq_stats* reduced, modseq_stats* out);
MODSEQ_API modseq_status modseq_reduce_chain(uint64_t p, unsigned ell, uint64_t s,
                                             const modseq_limits* limits, modseq_chain** out);
MODSEQ_API size_t modseq_chain_length(const modseq_chain* chain);
MODSEQ_API modseq_status modseq_chain_step(const modseq_chain* chain, size_t i,
                                           modseq_step* out);
MODSEQ_API uint64_t modseq_chain_s_star(const modseq_chain* chain);
/* Materialized statistics of bin_{s*}. */
MODSEQ_API void modseq_chain_base(const modseq_chain* chain, modseq_stats* out);
MODSEQ_API void modseq_chain_result(const modseq_chain* chain, modseq_stats* out);
MODSEQ_API void modseq_chain_free(modseq_chain* chain);
MODSEQ_API modseq_status modseq_e_size(uint64_t p, unsigned ell, uint64_t s, int m,
                                       uint64_t* size);
MODSEQ_API modseq_status modseq_e_set_count(uint64_t p, unsigned ell, uint64_t s, int m,
                                            uint64_t* size);
MODSEQ_API modseq_status modseq_chi_e(uint64_t p, unsigned ell, uint64_t s, int m,
                                      modseq_seq** out);

/* ---- primitives of v = [2,1,2,0,0,1,0,0] mod 4 ---- */

typedef enum { MODSEQ_BASE_ORACLE = 0, MODSEQ_BASE_PRINTED = 1 } modseq_vieru_base;
typedef struct modseq_vieru modseq_vieru;

MODSEQ_API modseq_status modseq_vieru_new(int base, modseq_vieru** out);
MODSEQ_API modseq_status modseq_vieru_z(modseq_vieru* ctx, uint64_t s, uint64_t* z);
MODSEQ_API void modseq_vieru_free(modseq_vieru* ctx);
MODSEQ_API modseq_status modseq_vieru_primitive(uint64_t s, modseq_seq** out);
MODSEQ_API modseq_status modseq_vieru_z_oracle(uint64_t s, uint64_t* z);
/* Copies the printed 32-entry initial block. */
MODSEQ_API void modseq_vieru_printed_z5(uint64_t out[32]);
/* *kind is 0..5 for cases A..F; *i is 1..4 in B, D, F. */
MODSEQ_API modseq_status modseq_vieru_case(uint64_t s, int* kind, unsigned* k, unsigned* i);
MODSEQ_API const char* modseq_vieru_case_name(int kind);

MODSEQ_API uint64_t modseq_d_range_begin(unsigned k);
MODSEQ_API uint64_t modseq_d_range_end(unsigned k);
MODSEQ_API modseq_status modseq_d_closed(unsigned k, uint64_t s, uint64_t* out);
MODSEQ_API modseq_status modseq_d_hamming(unsigned k, uint64_t s, uint64_t* out);
/* 2^{k - a(s - begin + 4)} with a(n) = popcount(n) + trailing zeros of n. */
MODSEQ_API modseq_status modseq_d_a_form(unsigned k, uint64_t s, uint64_t* out);
MODSEQ_API modseq_status modseq_d_from_esets(unsigned k, uint64_t s, uint64_t* out);
MODSEQ_API modseq_status modseq_d_recursive(unsigned k, uint64_t* buf, size_t cap,
                                            size_t* count);
MODSEQ_API modseq_status modseq_w_sequence(unsigned h, unsigned* buf, size_t cap,
                                           size_t* count);
MODSEQ_API modseq_status modseq_a_relation_check(unsigned k, const unsigned* exponents,
                                                 size_t count, int* holds);

/* ---- conformance suites ---- */

typedef struct modseq_report modseq_report;

MODSEQ_API uint64_t modseq_default_seed(void);
MODSEQ_API modseq_status modseq_verify_lemmas(uint64_t p, unsigned ell, uint64_t s_max,
                                              modseq_report** out);
/* c_set may be NULL (every nonzero constant). */
MODSEQ_API modseq_status modseq_verify_periods(uint64_t p, unsigned ell, uint64_t s_max,
                                               const uint64_t* c_set, size_t c_count,
                                               uint64_t seed, modseq_report** out);
MODSEQ_API modseq_status modseq_verify_structure(const uint64_t* moduli, size_t count,
                                                 uint64_t samples, uint64_t seed,
                                                 modseq_report** out);
MODSEQ_API modseq_status modseq_verify_vieru(unsigned k_max, modseq_report** out);
MODSEQ_API int modseq_report_ok(const modseq_report* r);
MODSEQ_API uint64_t modseq_report_instances(const modseq_report* r);
MODSEQ_API uint64_t modseq_report_failure_count(const modseq_report* r);
MODSEQ_API double modseq_report_wall_seconds(const modseq_report* r);
MODSEQ_API modseq_status modseq_report_suite(const modseq_report* r, char** out);
MODSEQ_API modseq_status modseq_report_records(const modseq_report* r, char** out);
MODSEQ_API modseq_status modseq_report_summary(const modseq_report* r, char** out);
MODSEQ_API void modseq_report_free(modseq_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MODSEQ_MODSEQ_H_ */

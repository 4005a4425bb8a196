#ifndef HESSCSP_H
#define HESSCSP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call.
 */
typedef enum hcsp_status {
  HCSP_STATUS_OK = 0,
  HCSP_STATUS_NULL_POINTER = 1,
  HCSP_STATUS_INVALID_UTF8 = 2,
  HCSP_STATUS_PARSE = 3,
  HCSP_STATUS_NOT_WEAKLY_INCREASING = 4,
  HCSP_STATUS_OUT_OF_RANGE = 5,
  HCSP_STATUS_INFEASIBLE = 6,
  HCSP_STATUS_INVALID_ARGUMENT = 7,
  HCSP_STATUS_OVERFLOW = 8,
  HCSP_STATUS_PANIC = 9,
} hcsp_status;

/**
 * Opaque handle to a computed CSP together with its Schur expansion and verification report.
 */
typedef struct hcsp_csp hcsp_csp;

/**
 * Opaque handle to a validated reverse Hessenberg function.
 */
typedef struct hcsp_rh hcsp_rh;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never NULL; do not free.
 */
const char *hcsp_status_message(enum hcsp_status status);

/**
 * Message for the most recent failure on this thread, or NULL. Valid until the next failing
 * call on this thread; do not free.
 */
const char *hcsp_last_error(void);

/**
 * Parses the comma-separated form, e.g. `"0,0,1"`.
 */
enum hcsp_status hcsp_rh_parse(const char *text, struct hcsp_rh **out);

/**
 * Validates `len` values `r(1), ..., r(len)`. `values` may be NULL when `len == 0`.
 */
enum hcsp_status hcsp_rh_from_values(const int64_t *values, size_t len, struct hcsp_rh **out);

struct hcsp_rh *hcsp_rh_staircase(size_t n);

struct hcsp_rh *hcsp_rh_complete(size_t n);

/**
 * Releases a handle. NULL is ignored.
 */
void hcsp_rh_free(struct hcsp_rh *rh);

/**
 * `n`; 0 for a NULL handle.
 */
size_t hcsp_rh_len(const struct hcsp_rh *rh);

/**
 * `r(i)` for `1 <= i <= n`.
 */
enum hcsp_status hcsp_rh_value(const struct hcsp_rh *rh, size_t i, size_t *out);

/**
 * Number of edges `E_r`; 0 for a NULL handle.
 */
size_t hcsp_rh_edge_count(const struct hcsp_rh *rh);

/**
 * True iff the graph has a proper `m`-colouring. False for a NULL handle.
 */
bool hcsp_rh_is_feasible(const struct hcsp_rh *rh, size_t m);

/**
 * Dimension `d_r = (m - 1) n - E_r` of the variety.
 */
enum hcsp_status hcsp_dimension(const struct hcsp_rh *rh, size_t m, int64_t *out);

/**
 * Number of proper `m`-colourings (0 when infeasible).
 */
enum hcsp_status hcsp_colouring_count(const struct hcsp_rh *rh, size_t m, uint64_t *out);

/**
 * Computes `CSP_r` with `m` colours, its Schur expansion and the verification report.
 * Infeasible input yields the zero polynomial, not an error.
 */
enum hcsp_status hcsp_csp_compute(const struct hcsp_rh *rh,
                                  size_t m,
                                  bool parallel,
                                  struct hcsp_csp **out);

void hcsp_csp_free(struct hcsp_csp *csp);

/**
 * True iff every Schur coefficient passed the nonnegativity, palindromicity and support
 * checks and the expansion reproduces the monomial data. False for a NULL handle.
 */
bool hcsp_csp_verified(const struct hcsp_csp *csp);

/**
 * Number of nonzero Schur coefficients.
 */
size_t hcsp_csp_schur_len(const struct hcsp_csp *csp);

/**
 * Number of dominant weights with a nonzero monomial coefficient.
 */
size_t hcsp_csp_monomial_len(const struct hcsp_csp *csp);

/**
 * The JSON report `{n, m, r, E_r, d_r, monomial, schur, verification}`, compact form.
 */
enum hcsp_status hcsp_csp_to_json(const struct hcsp_csp *csp, char **out);

/**
 * The JSON geometry report `{d_r, fibre_dims, poincare_product, poincare_bb, agree,
 * identities_pass}`.
 */
enum hcsp_status hcsp_poincare_json(const struct hcsp_rh *rh, size_t m, bool parallel, char **out);

/**
 * Writes whether the bundle-product and cell-paving Poincaré polynomials coincide and all
 * related identities hold.
 */
enum hcsp_status hcsp_poincare_check(const struct hcsp_rh *rh, size_t m, bool *out);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void hcsp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSCSP_H */

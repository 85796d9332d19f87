#ifndef WEIGHTCALC_H
#define WEIGHTCALC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
enum WcStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  WC_STATUS_OK = 0,
  WC_STATUS_NULL_POINTER = 1,
  WC_STATUS_CONSTRUCTION = 2,
  WC_STATUS_PARAMETER = 3,
  WC_STATUS_SHAPE = 4,
  WC_STATUS_TRUNCATION = 5,
  WC_STATUS_PRECONDITION = 6,
  WC_STATUS_DOMAIN = 7,
  WC_STATUS_PARSE = 8,
  WC_STATUS_PANIC = 9,
};
#ifndef __cplusplus
typedef int32_t WcStatus;
#endif // __cplusplus

/**
 * Opaque associated weight function.
 */
typedef struct WcOmega WcOmega;

/**
 * Opaque weight sequence.
 */
typedef struct WcSequence WcSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the last error message of this thread into `buf` (NUL-terminated, truncated to
 * `len` bytes). Returns the full message length without the terminator, or 0 when there
 * is no error.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t wc_last_error_message(char *buf, size_t len);

/**
 * Build `M_p = (p!)^s` truncated at `p`.
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
WcStatus wc_sequence_gevrey(double s, size_t p, struct WcSequence **out);

/**
 * Build `M_p = q^(p^2)` truncated at `p`.
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
WcStatus wc_sequence_qgevrey(double q, size_t p, struct WcSequence **out);

/**
 * Build a sequence from `n` log-quotients `log mu_1, ..., log mu_n`.
 *
 * # Safety
 * `log_mu` must point to `n` readable doubles; `out` must be null or writable.
 */
WcStatus wc_sequence_from_quotients(const double *log_mu, size_t n, struct WcSequence **out);

/**
 * Build a sequence from an inline spec (`gevrey:1`) or a JSON spec file path.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be null or writable.
 */
WcStatus wc_sequence_from_spec(const char *spec,
                               size_t default_truncation,
                               struct WcSequence **out);

/**
 * Release a sequence. Null is ignored.
 *
 * # Safety
 * `seq` must be null or a handle from this library that has not been freed.
 */
void wc_sequence_free(struct WcSequence *seq);

/**
 * Truncation `P` of a sequence, or 0 for null.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t wc_sequence_truncation(const struct WcSequence *seq);

/**
 * `log M_p`.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
WcStatus wc_sequence_log_m(const struct WcSequence *seq, size_t p, double *out);

/**
 * Moderate growth index scanned up to `d_max`; writes 0 when no `d <= d_max` passes.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
WcStatus wc_sequence_growth_index(const struct WcSequence *seq, size_t d_max, size_t *out);

/**
 * Moderate growth verdict: writes 1 when it holds, 0 otherwise.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
WcStatus wc_sequence_has_mg(const struct WcSequence *seq, int *out);

/**
 * Associated weight function of a log-convex sequence.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
WcStatus wc_omega_of(const struct WcSequence *seq, struct WcOmega **out);

/**
 * `omega(t)`; fails with a domain error beyond the validity bound.
 *
 * # Safety
 * `omega` must be a live handle; `out` must be writable.
 */
WcStatus wc_omega_eval(const struct WcOmega *omega, double t, double *out);

/**
 * Validity bound `t_max` of a weight function, or 0 for null.
 *
 * # Safety
 * `omega` must be null or a live handle.
 */
double wc_omega_t_max(const struct WcOmega *omega);

/**
 * Release a weight function. Null is ignored.
 *
 * # Safety
 * `omega` must be null or a handle from this library that has not been freed.
 */
void wc_omega_free(struct WcOmega *omega);

/**
 * Run the theorem suite on a sequence. Writes the JSON reports to `*json_out` (release
 * with [`wc_string_free`]) and the combined status to `*suite_status`: 0 consistent,
 * 1 indeterminate, 2 violation found.
 *
 * # Safety
 * `seq` must be a live handle; `json_out` and `suite_status_out` must be writable.
 */
WcStatus wc_verify_all(const struct WcSequence *seq,
                       uint64_t seed,
                       char **json_out,
                       int *suite_status_out);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void wc_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *wc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEIGHTCALC_H */

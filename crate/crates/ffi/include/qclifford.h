#ifndef QCLIFFORD_H
#define QCLIFFORD_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_UTF8 = 2,
  QC_STATUS_PARSE = 3,
  QC_STATUS_GUARD = 4,
  QC_STATUS_DIMENSION = 5,
  QC_STATUS_WRONG_N = 6,
  QC_STATUS_INVALID_ARGUMENT = 7,
  QC_STATUS_ARITHMETIC = 8,
  QC_STATUS_PANIC = 9,
} QcStatus;

/**
 * An element of the algebra of some session.
 */
typedef struct QcMultivector QcMultivector;

/**
 * A Hecke context for one `n`, symbolic or specialized at a point,
 * together with its named elements.
 */
typedef struct QcSession QcSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *qc_last_error(void);

/**
 * Library version as a static string.
 */
const char *qc_version(void);

/**
 * Create a session for `n`. `point` is null for the symbolic context or
 * text such as `"q=2,l=1"`. Points where a denominator of the named
 * elements vanishes are rejected with [`QcStatus::Guard`].
 *
 * # Safety
 * `point` is null or a NUL-terminated string; `out` is writable.
 */
QcStatus qc_session_new(uintptr_t n, const char *point, QcSession **out);

/**
 * # Safety
 * `s` is null or came from [`qc_session_new`] and is not used afterwards.
 */
void qc_session_free(QcSession *s);

/**
 * Dimension `2n` of the underlying vector space, or 0 for null.
 *
 * # Safety
 * `s` is null or a live session.
 */
uintptr_t qc_session_dim(const QcSession *s);

/**
 * Evaluate an expression such as `"b1*b2 - ~e13"`. On a parse error the
 * message carries the byte position.
 *
 * # Safety
 * `s` is a live session, `expr` a NUL-terminated string, `out` writable.
 */
QcStatus qc_eval(const QcSession *s, const char *expr, QcMultivector **out);

/**
 * # Safety
 * `m` is null or came from this library and is not used afterwards.
 */
void qc_mv_free(QcMultivector *m);

/**
 * Canonical text of `m`; release with [`qc_string_free`]. Null on error.
 *
 * # Safety
 * `m` is null or a live multivector.
 */
char *qc_mv_render(const QcMultivector *m);

/**
 * Nonzero when `m` is the zero element.
 *
 * # Safety
 * `m` is null or a live multivector.
 */
bool qc_mv_is_zero(const QcMultivector *m);

/**
 * Clifford product `a b`.
 *
 * # Safety
 * All handles are live; `out` is writable.
 */
QcStatus qc_mv_mul(const QcSession *s,
                   const QcMultivector *a,
                   const QcMultivector *b,
                   QcMultivector **out);

/**
 * Exterior product `a ^ b`.
 *
 * # Safety
 * All handles are live; `out` is writable.
 */
QcStatus qc_mv_wedge(const QcSession *s,
                     const QcMultivector *a,
                     const QcMultivector *b,
                     QcMultivector **out);

/**
 * Left contraction `a _| b` with respect to the session's form.
 *
 * # Safety
 * All handles are live; `out` is writable.
 */
QcStatus qc_mv_contract(const QcSession *s,
                        const QcMultivector *a,
                        const QcMultivector *b,
                        QcMultivector **out);

/**
 * Reversion `~a`.
 *
 * # Safety
 * All handles are live; `out` is writable.
 */
QcStatus qc_mv_reverse(const QcSession *s, const QcMultivector *a, QcMultivector **out);

/**
 * Run a verification suite and hand back its JSON report.
 *
 * `target` is one of `hecke`, `young`, `versor`, `clifford-kernel`, `all`;
 * `eps` is `1` or `-1`; `point` may be null. `exit_code` receives 0 when
 * no check failed and 1 otherwise.
 *
 * # Safety
 * String arguments are NUL-terminated or null where allowed; `json_out`
 * and `exit_code` are writable.
 */
QcStatus qc_verify(const char *target,
                   uintptr_t n,
                   int32_t eps,
                   const char *point,
                   bool symmetrize_b,
                   char **json_out,
                   int32_t *exit_code);

/**
 * # Safety
 * `s` is null or a string returned by this library, not used afterwards.
 */
void qc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCLIFFORD_H */

#ifndef QPB_H
#define QPB_H

/* Generated by cbindgen from qpb-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define QPB_OK 0

// A required pointer argument was null.
#define QPB_ERR_NULL_ARG 1

// A string argument was not valid UTF-8.
#define QPB_ERR_UTF8 2

// The algebra or suite name is not bundled.
#define QPB_ERR_UNKNOWN_NAME 3

// An expression failed to parse.
#define QPB_ERR_PARSE 4

// The suite ran but at least one check failed.
#define QPB_ERR_CHECK_FAILED 5

// An internal invariant was violated (caught panic).
#define QPB_ERR_PANIC 6

// Any other library error.
#define QPB_ERR_OTHER 7

// Opaque handle to a bundled presented algebra.
typedef struct QpbAlgebra QpbAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread.  The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *qpb_last_error(void);

// Frees a string returned by any `qpb_*` function.
//
// # Safety
// `s` must be a pointer previously returned by this library (or null).
void qpb_string_free(char *s);

// Opens a bundled algebra: `s1`..`s9`, `su2`, `u1`, `z2`, `rp2`, `zp:P`,
// or `a2n:N`.  On success writes a handle the caller releases with
// [`qpb_algebra_free`].
//
// # Safety
// `id` must be a NUL-terminated string; `out` must be a valid pointer.
int32_t qpb_algebra_new(const char *id, struct QpbAlgebra **out);

// # Safety
// `a` must come from [`qpb_algebra_new`] (or be null).
void qpb_algebra_free(struct QpbAlgebra *a);

// Writes the algebra id as a fresh string.
//
// # Safety
// `a` must be a live handle; `out` must be a valid pointer.
int32_t qpb_algebra_id(const struct QpbAlgebra *a, char **out);

// Number of normal words of degree at most `degree`.
//
// # Safety
// `a` must be a live handle; `out` must be a valid pointer.
int32_t qpb_algebra_basis_count(const struct QpbAlgebra *a, uintptr_t degree, uintptr_t *out);

// Parses `expr` over the algebra's generators and writes its normal form
// as a display string.
//
// # Safety
// `a` must be a live handle; `expr` must be NUL-terminated; `out` must be
// a valid pointer.
int32_t qpb_algebra_normalize(const struct QpbAlgebra *a, const char *expr, char **out);

// Runs a named verification suite (`hopf`, `comodule`, `connections`,
// `cleft`, `prolong`, `smash`, `phi`, `mu`, `reps`, `fredholm`, `all`).
// `cutoff == 0` selects each suite's default.  When `out_json` is
// non-null it receives the full JSON report even if checks fail; the
// return code is [`QPB_ERR_CHECK_FAILED`] in that case.
//
// # Safety
// `name` must be NUL-terminated; `out_json` may be null.
int32_t qpb_verify_suite(const char *name,
                         uintptr_t degree,
                         double q,
                         double phi,
                         uintptr_t cutoff,
                         uintptr_t margin,
                         uint64_t seed,
                         char **out_json);

// Graded-character trace of an expression over `a2n:n`, evaluated at the
// given cutoff.  Writes the complex value and a rigorous bound on the
// truncation error of its worst term.
//
// # Safety
// `monomial` must be NUL-terminated; the three out-pointers must be valid.
int32_t qpb_trace(uintptr_t n,
                  uintptr_t cutoff,
                  double q,
                  double phi,
                  const char *monomial,
                  double *out_re,
                  double *out_im,
                  double *out_tail);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPB_H */

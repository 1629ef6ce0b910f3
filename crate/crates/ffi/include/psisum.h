#ifndef PSISUM_H
#define PSISUM_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Outcome of a catalog check, mirroring the report statuses.
 */
typedef enum PsisumCheckStatus {
  PSISUM_CHECK_STATUS_OK = 0,
  PSISUM_CHECK_STATUS_LHS_NONCONVERGED = 1,
  PSISUM_CHECK_STATUS_POLE_SKIPPED = 2,
  PSISUM_CHECK_STATUS_DOMAIN_EXCLUDED = 3,
} PsisumCheckStatus;

typedef enum PsisumStatus {
  PSISUM_STATUS_OK = 0,
  PSISUM_STATUS_NULL_POINTER = 1,
  PSISUM_STATUS_INVALID_UTF8 = 2,
  PSISUM_STATUS_POLE = 3,
  PSISUM_STATUS_DOMAIN = 4,
  PSISUM_STATUS_NON_CONVERGENCE = 5,
  PSISUM_STATUS_UNKNOWN_ID = 6,
  PSISUM_STATUS_INVALID_PARAMS = 7,
  PSISUM_STATUS_UNSUPPORTED = 8,
  PSISUM_STATUS_PANIC = 9,
} PsisumStatus;

/*
 Opaque catalog handle.
 */
typedef struct PsisumCatalog PsisumCatalog;

/*
 One checked point. Values that were not computed are NaN.
 */
typedef struct PsisumCheck {
  double lhs;
  double rhs;
  double abs_diff;
  double rel_diff;
  enum PsisumCheckStatus status;
  bool pass;
} PsisumCheck;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or NULL if none.
 The pointer stays valid until the next failing call on the same thread.
 */
const char *psisum_last_error(void);

/*
 ψ(x).

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_digamma(double x, double *out);

/*
 ψ′(x).

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_trigamma(double x, double *out);

/*
 Γ(x).

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_gamma(double x, double *out);

/*
 Rising factorial (x)_n.

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_pochhammer(double x, uint64_t n, double *out);

/*
 Beta function B(x, y).

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_beta(double x, double y, double *out);

/*
 β(z) = ½[ψ((z+1)/2) − ψ(z/2)].

 # Safety
 `out` must be NULL or valid for a write of one `double`.
 */
enum PsisumStatus psisum_prudnikov_beta(double z, double *out);

/*
 pFq(a_1..a_p; b_1..b_q; z). Terminating series are summed exactly,
 others truncated; failure to converge is reported.

 # Safety
 `numerator` must point to `p` doubles and `denominator` to `q` doubles
 (either may be NULL when its length is 0). `out` must be NULL or valid
 for a write of one `double`.
 */
enum PsisumStatus psisum_pfq(const double *numerator,
                             size_t p,
                             const double *denominator,
                             size_t q,
                             double z,
                             double *out);

/*
 New catalog handle; release it with [`psisum_catalog_free`].
 Returns NULL only if construction panicked.
 */
struct PsisumCatalog *psisum_catalog_new(void);

/*
 # Safety
 `handle` must be NULL or a pointer from [`psisum_catalog_new`] that has
 not been freed yet.
 */
void psisum_catalog_free(struct PsisumCatalog *handle);

/*
 Number of entries; 0 for a NULL handle.

 # Safety
 `handle` must be NULL or a live catalog handle.
 */
size_t psisum_catalog_len(const struct PsisumCatalog *handle);

/*
 Id of entry `index` in sorted order, or NULL when out of range. The
 string lives as long as the handle.

 # Safety
 `handle` must be NULL or a live catalog handle.
 */
const char *psisum_catalog_id(const struct PsisumCatalog *handle, size_t index);

/*
 Checks one point of entry `id`. `params` uses the `a=1.5,c=2` syntax.
 A non-positive or NaN `tol` selects the entry's own tolerance.

 # Safety
 `handle` must be a live catalog handle, `id` and `params` NUL-terminated
 strings, and `out` valid for a write of one [`PsisumCheck`].
 */
enum PsisumStatus psisum_catalog_check(const struct PsisumCatalog *handle,
                                       const char *id,
                                       const char *params,
                                       double tol,
                                       struct PsisumCheck *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PSISUM_H */

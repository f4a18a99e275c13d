#ifndef BERGMAN_DIRICHLET_H
#define BERGMAN_DIRICHLET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum BdStatus {
  BD_STATUS_OK = 0,
  BD_STATUS_NULL_POINTER = 1,
  BD_STATUS_INVALID_PARAMETER = 2,
  BD_STATUS_DOMAIN = 3,
  BD_STATUS_DIVERGENT = 4,
  BD_STATUS_NOT_CONVERGED = 5,
  BD_STATUS_OVERFLOW = 6,
  BD_STATUS_PANIC = 7,
} BdStatus;

// Weighted Bergman-Dirichlet space on a disk.
typedef struct BdDiskSpace BdDiskSpace;

// Bargmann-Dirichlet space on the plane.
typedef struct BdPlaneSpace BdPlaneSpace;

typedef struct BdComplex {
  double re;
  double im;
} BdComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null if none.
// The pointer stays valid until the next failing call on this thread.
const char *bd_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *bd_version(void);

// Creates the disk space `(R, alpha, m)`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum BdStatus bd_disk_space_new(double radius,
                                double alpha,
                                size_t order,
                                struct BdDiskSpace **out);

// Releases a handle from [`bd_disk_space_new`]. Null is ignored.
//
// # Safety
// `space` must be null or a handle not yet freed.
void bd_disk_space_free(struct BdDiskSpace *space);

// Creates the plane space `(nu, m)`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum BdStatus bd_plane_space_new(double nu, size_t order, struct BdPlaneSpace **out);

// Releases a handle from [`bd_plane_space_new`]. Null is ignored.
//
// # Safety
// `space` must be null or a handle not yet freed.
void bd_plane_space_free(struct BdPlaneSpace *space);

// Reproducing kernel `K(z, w)` of the disk space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_disk_kernel(const struct BdDiskSpace *space,
                             struct BdComplex z,
                             struct BdComplex w,
                             bool force_series,
                             struct BdComplex *out);

// Squared norm of `z^n` in the disk space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_disk_monomial_norm_sq(const struct BdDiskSpace *space, size_t n, double *out);

// Squared norm of the polynomial with `len` Taylor coefficients.
//
// # Safety
// `coeffs` must point to `len` values (may be null if `len` is 0).
enum BdStatus bd_disk_norm_sq(const struct BdDiskSpace *space,
                              const struct BdComplex *coeffs,
                              size_t len,
                              double *out);

// Inner product `<f, g>` in the disk space.
//
// # Safety
// `f` and `g` must point to `f_len` and `g_len` values.
enum BdStatus bd_disk_inner_product(const struct BdDiskSpace *space,
                                    const struct BdComplex *f,
                                    size_t f_len,
                                    const struct BdComplex *g,
                                    size_t g_len,
                                    struct BdComplex *out);

// `sqrt(K(z, z))` in the disk space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_disk_evaluation_bound(const struct BdDiskSpace *space,
                                       struct BdComplex z,
                                       double *out);

// Reproducing kernel `K(z, w)` of the plane space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_plane_kernel(const struct BdPlaneSpace *space,
                              struct BdComplex z,
                              struct BdComplex w,
                              bool force_series,
                              struct BdComplex *out);

// Squared norm of `z^n` in the plane space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_plane_monomial_norm_sq(const struct BdPlaneSpace *space, size_t n, double *out);

// Squared norm of the polynomial with `len` Taylor coefficients.
//
// # Safety
// `coeffs` must point to `len` values (may be null if `len` is 0).
enum BdStatus bd_plane_norm_sq(const struct BdPlaneSpace *space,
                               const struct BdComplex *coeffs,
                               size_t len,
                               double *out);

// Inner product `<f, g>` in the plane space.
//
// # Safety
// `f` and `g` must point to `f_len` and `g_len` values.
enum BdStatus bd_plane_inner_product(const struct BdPlaneSpace *space,
                                     const struct BdComplex *f,
                                     size_t f_len,
                                     const struct BdComplex *g,
                                     size_t g_len,
                                     struct BdComplex *out);

// `sqrt(K(z, z))` in the plane space.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_plane_evaluation_bound(const struct BdPlaneSpace *space,
                                        struct BdComplex z,
                                        double *out);

// `min(1, R^{2m}/(m! (alpha+2)_m), alpha/R²)` for the disk handle.
//
// # Safety
// `space` must be a live handle and `out` valid for one write.
enum BdStatus bd_disk_embedding_constant(const struct BdDiskSpace *space, double *out);

// Sums `pFq(num; den; x)` to relative `tolerance` with at most `max_terms` terms.
//
// # Safety
// `num` and `den` must point to `p` and `q` values; `out` valid for one write.
enum BdStatus bd_hypergeometric(const double *num,
                                size_t p,
                                const double *den,
                                size_t q,
                                struct BdComplex x,
                                double tolerance,
                                size_t max_terms,
                                struct BdComplex *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BERGMAN_DIRICHLET_H */

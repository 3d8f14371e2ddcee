#ifndef PPINTERP_H
#define PPINTERP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_POINTER = 1,
  PP_STATUS_TOO_FEW_POINTS = 2,
  PP_STATUS_NOT_INCREASING = 3,
  PP_STATUS_NON_FINITE = 4,
  PP_STATUS_LENGTH_MISMATCH = 5,
  PP_STATUS_OUT_OF_RANGE = 6,
  PP_STATUS_INVALID_CONFIG = 7,
  PP_STATUS_PANIC = 99,
} PpStatus;

// Interpolation settings.
typedef struct PpConfig PpConfig;

// A fitted 1D adaptive interpolant.
typedef struct PpInterpolant1D PpInterpolant1D;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message of this thread into `buf` as a NUL-terminated string,
// truncating if needed. Returns the full message length in bytes, excluding the NUL.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t pp_last_error_message(char *buf, size_t len);

// Creates a configuration. `method` is 1 (DBI) or 2 (PPI); `st` is 1, 2 or 3.
//
// # Safety
// `out` must be a valid pointer. The handle is released with [`pp_config_free`].
enum PpStatus pp_config_new(size_t degree,
                            uint8_t method,
                            uint8_t st,
                            double eps0,
                            double eps1,
                            struct PpConfig **out);

// # Safety
// `config` must be null or a handle from [`pp_config_new`] not yet freed.
void pp_config_free(struct PpConfig *config);

// Fits an adaptive interpolant to `n` values on the mesh `x`.
//
// # Safety
// `x` and `u` must point to `n` readable values, `config` must be a live handle, and `out`
// must be valid. The handle is released with [`pp_interp1d_free`].
enum PpStatus pp_interp1d_new(const double *x,
                              const double *u,
                              size_t n,
                              const struct PpConfig *config,
                              struct PpInterpolant1D **out);

// Evaluates a fitted interpolant at `m` points.
//
// # Safety
// `interp` must be a live handle, `xout` must point to `m` readable values and `out` to `m`
// writable values.
enum PpStatus pp_interp1d_eval(const struct PpInterpolant1D *interp,
                               const double *xout,
                               size_t m,
                               double *out);

// # Safety
// `interp` must be null or a handle from [`pp_interp1d_new`] not yet freed.
void pp_interp1d_free(struct PpInterpolant1D *interp);

// One-shot 1D adaptive interpolation of `v` on `x` (length `n`) at `xout` (length `m`).
//
// # Safety
// Pointers must reference arrays of the stated lengths; `out` holds `m` values.
enum PpStatus pp_adaptive_1d(const double *x,
                             const double *v,
                             size_t n,
                             const double *xout,
                             size_t m,
                             size_t d,
                             uint8_t im,
                             uint8_t st,
                             double eps0,
                             double eps1,
                             double *out);

// One-shot 2D adaptive interpolation. `v` holds `nx * ny` values and `out` receives
// `mx * my` values, x fastest.
//
// # Safety
// Pointers must reference arrays of the stated lengths.
enum PpStatus pp_adaptive_2d(const double *x,
                             size_t nx,
                             const double *y,
                             size_t ny,
                             const double *v,
                             const double *xout,
                             size_t mx,
                             const double *yout,
                             size_t my,
                             size_t d,
                             uint8_t im,
                             uint8_t st,
                             double eps0,
                             double eps1,
                             double *out);

// One-shot 3D adaptive interpolation. `v` holds `nx * ny * nz` values and `out` receives
// `mx * my * mz` values, x fastest then y.
//
// # Safety
// Pointers must reference arrays of the stated lengths.
enum PpStatus pp_adaptive_3d(const double *x,
                             size_t nx,
                             const double *y,
                             size_t ny,
                             const double *z,
                             size_t nz,
                             const double *v,
                             const double *xout,
                             size_t mx,
                             const double *yout,
                             size_t my,
                             const double *zout,
                             size_t mz,
                             size_t d,
                             uint8_t im,
                             uint8_t st,
                             double eps0,
                             double eps1,
                             double *out);

// PCHIP interpolation of `v` on `x` (length `n`) at `xout` (length `m`).
//
// # Safety
// Pointers must reference arrays of the stated lengths; `out` holds `m` values.
enum PpStatus pp_pchip_1d(const double *x,
                          const double *v,
                          size_t n,
                          const double *xout,
                          size_t m,
                          double *out);

// Tensor-product PCHIP, same layout as [`pp_adaptive_2d`].
//
// # Safety
// Pointers must reference arrays of the stated lengths.
enum PpStatus pp_pchip_2d(const double *x,
                          size_t nx,
                          const double *y,
                          size_t ny,
                          const double *v,
                          const double *xout,
                          size_t mx,
                          const double *yout,
                          size_t my,
                          double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PPINTERP_H */

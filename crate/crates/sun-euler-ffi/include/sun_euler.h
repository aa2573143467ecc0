/* C interface to the sun-euler SU(N) Euler-angle library. */

#ifndef SUN_EULER_H
#define SUN_EULER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which parameter box to use for the flat directions.
 */
typedef enum SunEulerRangeMode {
  SUN_EULER_RANGE_MODE_QUOTIENT = 0,
  SUN_EULER_RANGE_MODE_COVERING = 1,
} SunEulerRangeMode;

/**
 * Result codes shared by every entry point.
 */
typedef enum SunEulerStatus {
  SUN_EULER_STATUS_OK = 0,
  SUN_EULER_STATUS_NULL_POINTER = 1,
  SUN_EULER_STATUS_INVALID_DIMENSION = 2,
  SUN_EULER_STATUS_INVALID_ARGUMENT = 3,
  SUN_EULER_STATUS_DOMAIN_ERROR = 4,
  SUN_EULER_STATUS_INTERNAL_ERROR = 5,
} SunEulerStatus;

/**
 * How θ is chosen when sampling density matrices.
 */
typedef enum SunEulerThetaMode {
  SUN_EULER_THETA_MODE_ENDPOINTS = 0,
  SUN_EULER_THETA_MODE_UNIFORM = 1,
} SunEulerThetaMode;

/**
 * Opaque sampler handle.
 */
typedef struct SunEulerSampler SunEulerSampler;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, nul-terminated description of a status code.
 */
const char *sun_euler_status_name(enum SunEulerStatus status);

/**
 * Number of Euler parameters for SU(n): n²−1, or 0 if n < 2.
 */
size_t sun_euler_param_count(uint32_t n);

/**
 * Write generator λ_index (1-based) of su(n) into `re`/`im` (n*n doubles).
 *
 * # Safety
 * `re` and `im` must point to writable arrays of at least n*n doubles.
 */
enum SunEulerStatus sun_euler_generator(uint32_t n, uint32_t index, double *re, double *im);

/**
 * Evaluate U(α) into `re`/`im` (n*n doubles). `alpha` holds `alpha_len`
 * doubles and must have exactly n²−1 entries.
 *
 * # Safety
 * `alpha` must point to `alpha_len` readable doubles; `re`/`im` to n*n
 * writable doubles.
 */
enum SunEulerStatus sun_euler_unitary(uint32_t n,
                                      const double *alpha,
                                      size_t alpha_len,
                                      double *re,
                                      double *im);

/**
 * Evaluate the invariant-measure kernel K_SU(n)(α) into `out`.
 *
 * # Safety
 * `alpha` must point to `alpha_len` readable doubles; `out` to one
 * writable double.
 */
enum SunEulerStatus sun_euler_kernel(uint32_t n,
                                     const double *alpha,
                                     size_t alpha_len,
                                     double *out);

/**
 * Closed-formula group volume of SU(n).
 *
 * # Safety
 * `out` must point to one writable double.
 */
enum SunEulerStatus sun_euler_volume_marinov(uint32_t n, double *out);

/**
 * Group volume assembled from per-factor integrals; equals the closed
 * formula to machine precision.
 *
 * # Safety
 * `out` must point to one writable double.
 */
enum SunEulerStatus sun_euler_volume_quadrature(uint32_t n, double *out);

/**
 * Monte Carlo volume estimate; deterministic for fixed (seed, workers).
 * Needs at least 10000 samples and one worker.
 *
 * # Safety
 * `value` and `stderr_out` must point to writable doubles.
 */
enum SunEulerStatus sun_euler_volume_monte_carlo(uint32_t n,
                                                 uint64_t samples,
                                                 uint64_t seed,
                                                 uint32_t workers,
                                                 double *value,
                                                 double *stderr_out);

/**
 * Fill `lo`/`hi` (n²−1 doubles each) with the parameter box of the chosen
 * mode, indexed by parameter − 1.
 *
 * # Safety
 * `lo` and `hi` must point to writable arrays of n²−1 doubles.
 */
enum SunEulerStatus sun_euler_ranges(uint32_t n,
                                     enum SunEulerRangeMode mode,
                                     double *lo,
                                     double *hi);

/**
 * Fill `lo`/`hi` (n−1 doubles each) with the sphere-angle bounds of the
 * density-matrix parametrization.
 *
 * # Safety
 * `lo` and `hi` must point to writable arrays of n−1 doubles.
 */
enum SunEulerStatus sun_euler_theta_ranges(uint32_t n, double *lo, double *hi);

/**
 * Build ρ = U ρ_d U† from θ (n−1 entries) and α (n²−1 entries) into
 * `re`/`im` (n*n doubles).
 *
 * # Safety
 * `theta` and `alpha` must point to the stated number of readable
 * doubles; `re`/`im` to n*n writable doubles.
 */
enum SunEulerStatus sun_euler_density(uint32_t n,
                                      const double *theta,
                                      size_t theta_len,
                                      const double *alpha,
                                      size_t alpha_len,
                                      double *re,
                                      double *im);

/**
 * Create a sampler for SU(n) with the given seed and range mode. Returns
 * null on invalid arguments. Free with `sun_euler_sampler_free`.
 */
struct SunEulerSampler *sun_euler_sampler_new(uint32_t n,
                                              uint64_t seed,
                                              enum SunEulerRangeMode mode);

/**
 * Draw the next parameter vector (n²−1 doubles) from the sampler.
 *
 * # Safety
 * `sampler` must come from `sun_euler_sampler_new` and not be freed;
 * `out` must point to n²−1 writable doubles.
 */
enum SunEulerStatus sun_euler_sampler_next_angles(struct SunEulerSampler *sampler, double *out);

/**
 * Draw the next Haar-distributed U ∈ SU(n) into `re`/`im` (n*n doubles).
 *
 * # Safety
 * `sampler` must come from `sun_euler_sampler_new` and not be freed;
 * `re`/`im` must point to n*n writable doubles.
 */
enum SunEulerStatus sun_euler_sampler_next_unitary(struct SunEulerSampler *sampler,
                                                   double *re,
                                                   double *im);

/**
 * Draw the next random density matrix into `re`/`im` (n*n doubles).
 *
 * # Safety
 * `sampler` must come from `sun_euler_sampler_new` and not be freed;
 * `re`/`im` must point to n*n writable doubles.
 */
enum SunEulerStatus sun_euler_sampler_next_density(struct SunEulerSampler *sampler,
                                                   enum SunEulerThetaMode theta_mode,
                                                   double *re,
                                                   double *im);

/**
 * Release a sampler. Passing null is a no-op.
 *
 * # Safety
 * `sampler` must be null or a pointer from `sun_euler_sampler_new` that
 * has not been freed yet.
 */
void sun_euler_sampler_free(struct SunEulerSampler *sampler);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUN_EULER_H */

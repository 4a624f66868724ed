#ifndef TRIWALK_H
#define TRIWALK_H

/* Auto-generated by cbindgen from the triwalk-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which residue of t mod 3 skips the coin. Pass the numeric value to
// `twk_walk_new`; `TWK_SCHEDULE_MAIN` is the reference walk.
typedef enum {
  TWK_SCHEDULE_MAIN = 0,
  TWK_SCHEDULE_SKIP_AT0 = 1,
  TWK_SCHEDULE_SKIP_AT1 = 2,
} TwkSchedule;

// Result of every fallible call in this API.
typedef enum {
  // Success; out-parameters hold the results.
  TWK_STATUS_OK = 0,
  // A required pointer argument was null.
  TWK_STATUS_NULL_ARGUMENT = 1,
  // Arguments were rejected (bad angle, unnormalizable spin, bad branch,
  // a singular evaluation point, or an undersized buffer).
  TWK_STATUS_INVALID_INPUT = 2,
  // A quadrature failed to converge or an internal invariant broke.
  TWK_STATUS_NONCONVERGENCE = 3,
} TwkStatus;

// The long-time distribution model for one (angle, initial spin) pair.
typedef struct TwkLimitModel TwkLimitModel;

// A coined walk on the line: angle, schedule, and the evolving state.
typedef struct TwkWalk TwkWalk;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *twk_version(void);

// Static human-readable description of a status code.
const char *twk_status_message(TwkStatus status);

// The angle whose coin is the Grover diffusion operator, acos(-1/3).
double twk_grover_theta(void);

// Creates a walk at t = 0 with the walker at the origin.
//
// `schedule` takes a `TwkSchedule` value. On success `*out` owns the walk.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_walk_new(double theta,
                       double a_re,
                       double a_im,
                       double b_re,
                       double b_im,
                       double g_re,
                       double g_im,
                       uint32_t schedule,
                       TwkWalk **out);

// Releases a walk. Passing null is a no-op.
//
// # Safety
// `walk` must be null or a pointer obtained from `twk_walk_new` that has
// not been freed yet.
void twk_walk_free(TwkWalk *walk);

// Advances the walk by `steps` time steps.
//
// # Safety
// `walk` must be a live handle from `twk_walk_new`.
TwkStatus twk_walk_evolve(TwkWalk *walk, uint64_t steps);

// Reports the walk's current time.
//
// # Safety
// `walk` must be a live handle; `out` must be writable.
TwkStatus twk_walk_time(const TwkWalk *walk, uint64_t *out);

// Number of lattice sites the position distribution spans, i.e. the
// capacity `twk_walk_distribution` needs.
//
// # Safety
// `walk` must be a live handle; `out` must be writable.
TwkStatus twk_walk_distribution_len(const TwkWalk *walk, size_t *out);

// Writes the position distribution as parallel arrays of sites and
// probabilities, ordered by increasing site. Rejects undersized buffers;
// query `twk_walk_distribution_len` first. `written` receives the number
// of rows filled.
//
// # Safety
// `walk` must be a live handle; `xs` and `ps` must point to at least
// `capacity` writable elements; `written` must be writable.
TwkStatus twk_walk_distribution(const TwkWalk *walk,
                                int64_t *xs,
                                double *ps,
                                size_t capacity,
                                size_t *written);

// Total probability mass of the walk (should stay 1 up to rounding).
//
// # Safety
// `walk` must be a live handle; `out` must be writable.
TwkStatus twk_walk_total_mass(const TwkWalk *walk, double *out);

// Builds the long-time distribution model (atom mass plus continuous
// density) for the given angle and spin. `nodes` caps the quadrature size;
// pass 0 for the library default.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_limit_model_new(double theta,
                              double a_re,
                              double a_im,
                              double b_re,
                              double b_im,
                              double g_re,
                              double g_im,
                              size_t nodes,
                              TwkLimitModel **out);

// Releases a limit model. Passing null is a no-op.
//
// # Safety
// `model` must be null or a pointer obtained from `twk_limit_model_new`
// that has not been freed yet.
void twk_limit_model_free(TwkLimitModel *model);

// Mass of the point atom at the origin of the rescaled distribution.
//
// # Safety
// `model` must be a live handle; `out` must be writable.
TwkStatus twk_limit_model_delta(const TwkLimitModel *model, double *out);

// Support of the continuous density as four doubles
// (d1_lo, d1_hi, d2_lo, d2_hi) written to `out[0..4]`.
//
// # Safety
// `model` must be a live handle; `out` must point to 4 writable doubles.
TwkStatus twk_limit_model_support(const TwkLimitModel *model, double *out);

// Continuous part of the limit density at rescaled position `x`; zero
// outside the support. Evaluation within 1e-9 of a support endpoint is
// rejected as invalid input (the density has integrable singularities
// there).
//
// # Safety
// `model` must be a live handle; `out` must be writable.
TwkStatus twk_limit_model_density(const TwkLimitModel *model, double x, double *out);

// Finite-time approximation P(X_t = x) ~ density(x/t)/t for t >= 1; the
// origin cell belongs to the atom and reports 0.
//
// # Safety
// `model` must be a live handle; `out` must be writable.
TwkStatus twk_limit_model_approx_prob(const TwkLimitModel *model,
                                      int64_t x,
                                      uint64_t t,
                                      double *out);

// Atom mass for one (angle, spin) pair without building a full model.
// `nodes` caps the quadrature size; pass 0 for the library default.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_delta_mass(double theta,
                         double a_re,
                         double a_im,
                         double b_re,
                         double b_im,
                         double g_re,
                         double g_im,
                         size_t nodes,
                         double *out);

// Real dispersion factor g(k) shared by the two moving bands.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_dispersion(double theta, double k, double *out);

// Group velocity of moving band `branch` (2 or 3) at momentum `k`.
// Momenta where the velocity's sign is undefined are rejected.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_group_velocity(uint32_t branch, double theta, double k, double *out);

// Rank of the 7x3 delocalization system for the given angle; rank 3 means
// every nonzero spin localizes.
//
// # Safety
// `out` must be a valid writable pointer.
TwkStatus twk_delocalization_rank(double theta, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIWALK_H */

#ifndef HYPCHROMA_H
#define HYPCHROMA_H

/* Generated by cbindgen from the hypchroma-ffi crate; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of an FFI call.
typedef enum {
  // The call succeeded and the out-parameters are filled in.
  HYPC_STATUS_OK = 0,
  // An argument was outside its documented domain.
  HYPC_STATUS_INVALID_ARGUMENT = 1,
  // The computation failed numerically (quadrature budget exhausted,
  // certification check failed, or an internal panic was caught).
  HYPC_STATUS_NUMERIC_FAILURE = 2,
  // A required pointer was null.
  HYPC_STATUS_NULL_POINTER = 3,
} HypcStatus;

// Result list of a parameter sweep; opaque, free with `hypc_sweep_free`.
typedef struct HypcSweep HypcSweep;

// The distance-to-infinity constants of the colouring bound:
// `rho` solves `tan s = s` on `(π, 3π/2)`, `nu = sin(rho)/rho`, and
// `limit = 1 − 1/nu ≈ 5.6033`.
typedef struct {
  double rho;
  double nu;
  double limit;
} HypcLimitConstants;

// Tuning knobs of the spectral minimum search; get defaults from
// `hypc_search_options_default`.
typedef struct {
  // Right edge of the frequency search window (at least 20).
  double s_max;
  // Pitch of the coarse scan, in (0, 1).
  double grid_step;
  // Width to which the minimiser is refined (positive).
  double refine_tol;
  // The safety scan covers `[s_max, tail_factor * s_max]` (at least 2).
  double tail_factor;
} HypcSearchOptions;

// One certified bound evaluation.
typedef struct {
  // The distance the bound was evaluated at.
  double d;
  // Certified minimum of the normalised spectrum (negative).
  double psi_min;
  // Frequency where the minimum is attained.
  double s_star;
  // The chromatic lower bound `1 − 1/psi_min`.
  double bound;
  // Largest spectral value (NaN when `has_spectrum` is false).
  double spectrum_sup;
  // Smallest spectral value (NaN when `has_spectrum` is false).
  double spectrum_inf;
  // Whether the two spectral extremes were evaluated (d ≤ 300).
  bool has_spectrum;
} HypcBoundResult;

// A certified seven-point spindle embedding: eleven unit edges, chromatic
// number four.  `points` are Cartesian coordinates in the unit disk;
// `edges` index into them.
typedef struct {
  // Common hyperbolic length of the eleven edges.
  double d;
  // Apex angle of each equilateral triangle.
  double alpha;
  // Length of the two long diagonals.
  double leg;
  // Rotation between the two rhombi.
  double theta;
  // Largest certified deviation of an edge length from `d`.
  double max_deviation;
  // Exhaustively computed chromatic number (always 4).
  uint32_t chromatic_number;
  double points[7][2];
  uint32_t edges[11][2];
} HypcSpindle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Fills `out` with the `d → ∞` constants of the bound.
//
// # Safety
//
// `out` must be null or point to writable memory for one value.
HypcStatus hypc_limit_constants(HypcLimitConstants *out);

// Fills `out` with the default search options.
//
// # Safety
//
// `out` must be null or point to writable memory for one value.
HypcStatus hypc_search_options_default(HypcSearchOptions *out);

// Certified chromatic lower bound at distance `d` (0 < d ≤ 700).
// `options` may be null for defaults.
//
// # Safety
//
// `options` must be null or point to a valid value; `out` must be null or
// point to writable memory for one value.
HypcStatus hypc_bound(double d, const HypcSearchOptions *options, HypcBoundResult *out);

// The spherical function at spectral parameter `lambda` and distance `d`
// (0 < d ≤ 700).
//
// # Safety
//
// `out` must be null or point to writable memory for one double.
HypcStatus hypc_spherical_function(double lambda, double d, double *out);

// L¹ distance between the normalised radial density at distance `d` and
// the uniform density; decreases towards 0 as `d` grows.
//
// # Safety
//
// `out` must be null or point to writable memory for one double.
HypcStatus hypc_l1_deviation(double d, double *out);

// Builds and certifies the seven-point spindle embedding with edge
// length `d` (0 < d ≤ 700).
//
// # Safety
//
// `out` must be null or point to writable memory for one value.
HypcStatus hypc_spindle(double d, HypcSpindle *out);

// Evaluates the bound on the grid `from, from + step, …, to` and hands
// back an owning handle.  On success `*out` must eventually be released
// with `hypc_sweep_free`; on failure `*out` is set to null.
//
// # Safety
//
// `options` must be null or point to a valid value; `out` must be null or
// point to writable memory for one pointer.
HypcStatus hypc_sweep_run(double from,
                          double to,
                          double step,
                          const HypcSearchOptions *options,
                          HypcSweep **out);

// Number of results held by `sweep`; 0 for a null handle.
//
// # Safety
//
// `sweep` must be null or a live handle from `hypc_sweep_run`.
size_t hypc_sweep_len(const HypcSweep *sweep);

// Copies result `index` of `sweep` into `out`.
//
// # Safety
//
// `sweep` must be null or a live handle from `hypc_sweep_run`; `out` must
// be null or point to writable memory for one value.
HypcStatus hypc_sweep_get(const HypcSweep *sweep, size_t index, HypcBoundResult *out);

// Releases a sweep handle; a null handle is a no-op.
//
// # Safety
//
// `sweep` must be null or a live handle from `hypc_sweep_run`, and must
// not be used afterwards.
void hypc_sweep_free(HypcSweep *sweep);

// Static, NUL-terminated name of a status code.
const char *hypc_status_name(HypcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPCHROMA_H */

#ifndef NORMCHECK_H
#define NORMCHECK_H

/* Generated from the normcheck-ffi crate sources; edit those instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible call.
 */
typedef enum NcStatus {
  /**
   * Success.
   */
  NC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  NC_STATUS_INVALID_UTF8 = 2,
  /**
   * The spec JSON failed to parse or validate; see `nc_last_error`.
   */
  NC_STATUS_INVALID_SPEC = 3,
  /**
   * Evaluation failed (dimension mismatch, bad config, ...); see
   * `nc_last_error`.
   */
  NC_STATUS_EVAL_ERROR = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  NC_STATUS_PANIC = 5,
} NcStatus;

/**
 * Opaque handle around a validated norm spec.
 */
typedef struct NcSpec NcSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next library call on the same thread; never free it.
 */
const char *nc_last_error(void);

/**
 * Parses and validates a norm spec from JSON (same schema as the CLI's
 * `--spec` files) and stores a handle in `out_spec`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out_spec` must be a valid
 * pointer to writable memory.
 */
enum NcStatus nc_spec_from_json(const char *json, struct NcSpec **out_spec);

/**
 * Releases a spec handle. Null is a no-op.
 *
 * # Safety
 * `spec` must have come from `nc_spec_from_json` and not be freed twice.
 */
void nc_spec_free(struct NcSpec *spec);

/**
 * Dimension of the spec's vector space.
 *
 * # Safety
 * `spec` must be a live handle from `nc_spec_from_json`.
 */
size_t nc_spec_dim(const struct NcSpec *spec);

/**
 * Number of `f64` slots a vector for this spec occupies: `dim` for real
 * specs, `2 * dim` for complex (interleaved re/im).
 *
 * # Safety
 * `spec` must be a live handle from `nc_spec_from_json`.
 */
size_t nc_spec_slots(const struct NcSpec *spec);

/**
 * Evaluates the norm at a flat coordinate array of `len` slots.
 *
 * # Safety
 * `spec` must be a live handle; `coords` must point to `len` readable
 * doubles; `out_value` must be writable.
 */
enum NcStatus nc_norm_eval(const struct NcSpec *spec,
                           const double *coords,
                           size_t len,
                           double *out_value);

/**
 * Evaluates the anchored profile
 * `p(x) = sqrt((norm(x+y)^2 + norm(x-y)^2)/2 - 1)`.
 *
 * The anchor `y` is normalized internally, so any nonzero vector works.
 * `out_flagged` may be null; when provided it receives 1 if the radicand
 * needed a beyond-noise clamp and 0 otherwise.
 *
 * # Safety
 * `spec` must be a live handle; `y`/`x` must point to `y_len`/`x_len`
 * readable doubles; `out_value` must be writable; `out_flagged` must be
 * writable when non-null.
 */
enum NcStatus nc_p_eval(const struct NcSpec *spec,
                        const double *y,
                        size_t y_len,
                        const double *x,
                        size_t x_len,
                        double *out_value,
                        bool *out_flagged);

/**
 * Classifies the spec and stores the full verdict as a JSON string in
 * `out_json` (schema identical to the CLI's `verdict.json`).
 *
 * `out_not_inner_product` may be null; when provided it receives 1 for a
 * falsified norm and 0 for a consistent one. Pass `n_samples > 0`; `seed`
 * picks the deterministic sample streams; `threshold` must be positive.
 *
 * # Safety
 * `spec` must be a live handle; `out_json` must be writable;
 * `out_not_inner_product` must be writable when non-null.
 */
enum NcStatus nc_classify(const struct NcSpec *spec,
                          uint64_t n_samples,
                          uint64_t seed,
                          double threshold,
                          char **out_json,
                          bool *out_not_inner_product);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have come from this library and not be freed twice.
 */
void nc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NORMCHECK_H */

#ifndef HAUSDIV_H
#define HAUSDIV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Pencil choice for [`hd_param_by_lines`].
 */
typedef enum HdPencil {
  HD_PENCIL_SLOPE = 0,
  HD_PENCIL_INTERCEPT = 1,
  HD_PENCIL_AUTO = 2,
} HdPencil;

/**
 * Result codes.
 */
typedef enum HdStatus {
  HD_STATUS_OK = 0,
  HD_STATUS_NULL_POINTER = 1,
  HD_STATUS_INVALID_UTF8 = 2,
  HD_STATUS_PARSE = 3,
  HD_STATUS_INVALID_INPUT = 4,
  /**
   * Any other mathematical precondition failure (see the message).
   */
  HD_STATUS_DOMAIN = 5,
  HD_STATUS_EMPTY_SYSTEM = 6,
  HD_STATUS_VERIFICATION_FAILED = 7,
  HD_STATUS_INTERNAL = 8,
  HD_STATUS_PANIC = 9,
} HdStatus;

/**
 * Effective divisor.
 */
typedef struct HdDivisor HdDivisor;

/**
 * Linear system H(n, D).
 */
typedef struct HdLinsys HdLinsys;

/**
 * Polynomial over Q.
 */
typedef struct HdPoly HdPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Owned by the
 * library; valid until the next call.
 */
const char *hd_last_error_message(void);

/**
 * Library version, static string.
 */
const char *hd_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library or be NULL.
 */
void hd_string_free(char *s);

/**
 * Parses a polynomial in x, y, z, t and parameters.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` a valid pointer.
 */
enum HdStatus hd_poly_parse(const char *src, struct HdPoly **out);

/**
 * Canonical text form of a polynomial.
 *
 * # Safety
 * `p` must be a live handle; `out` a valid pointer.
 */
enum HdStatus hd_poly_to_string(const struct HdPoly *p, char **out);

/**
 * Total degree, or -1 for the zero polynomial or a NULL handle.
 *
 * # Safety
 * `p` must be a live handle or NULL.
 */
int64_t hd_poly_degree(const struct HdPoly *p);

/**
 * # Safety
 * `p` must come from this library or be NULL.
 */
void hd_poly_free(struct HdPoly *p);

/**
 * Reads a divisor from its JSON description.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum HdStatus hd_divisor_from_json(const char *json, struct HdDivisor **out);

/**
 * # Safety
 * `d` must be a live handle; `out` a valid pointer.
 */
enum HdStatus hd_divisor_to_json(const struct HdDivisor *d, char **out);

/**
 * # Safety
 * `d` must come from this library or be NULL.
 */
void hd_divisor_free(struct HdDivisor *d);

/**
 * Computes H(n, D).
 *
 * # Safety
 * `d` must be a live handle; `out` a valid pointer.
 */
enum HdStatus hd_linsys_compute(uint32_t n, const struct HdDivisor *d, struct HdLinsys **out);

/**
 * Projective dimension of the system, or -2 for a NULL handle.
 *
 * # Safety
 * `l` must be a live handle or NULL.
 */
int64_t hd_linsys_dim(const struct HdLinsys *l);

/**
 * Copies the defining polynomial (with parameters lambda_k) into a new handle.
 *
 * # Safety
 * `l` must be a live handle; `out` a valid pointer.
 */
enum HdStatus hd_linsys_defining_poly(const struct HdLinsys *l, struct HdPoly **out);

/**
 * JSON description of the system.
 *
 * # Safety
 * `l` must be a live handle; `out` a valid pointer.
 */
enum HdStatus hd_linsys_to_json(const struct HdLinsys *l, char **out);

/**
 * # Safety
 * `l` must come from this library or be NULL.
 */
void hd_linsys_free(struct HdLinsys *l);

/**
 * Parametrizes a form of degree n with an (n-1)-fold point at (a:b:1).
 * `a` and `b` are rationals in text form. Writes JSON to `out`.
 *
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum HdStatus hd_param_by_lines(const struct HdPoly *form,
                                const char *a,
                                const char *b,
                                enum HdPencil pencil,
                                char **out);

/**
 * Full approximation pipeline with automatic choices. `point_a`/`point_b`
 * may both be NULL to pick the singular point automatically.
 *
 * # Safety
 * Pointers must be valid or NULL as documented; strings NUL-terminated.
 */
enum HdStatus hd_approximate(const struct HdPoly *curve,
                             const char *point_a,
                             const char *point_b,
                             uint64_t seed,
                             char **out);

/**
 * Sampled Hausdorff-distance estimate between two real curves in a box.
 *
 * # Safety
 * Handles must be live; `out` a valid pointer.
 */
enum HdStatus hd_hausdorff_estimate(const struct HdPoly *f,
                                    const struct HdPoly *g,
                                    double xmin,
                                    double xmax,
                                    double ymin,
                                    double ymax,
                                    size_t grid,
                                    double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAUSDIV_H */

#ifndef LEIBKIT_H
#define LEIBKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LeibkitStatus {
  LEIBKIT_STATUS_OK = 0,
  LEIBKIT_STATUS_NULL_POINTER = 1,
  LEIBKIT_STATUS_INVALID_UTF8 = 2,
  LEIBKIT_STATUS_PARSE = 3,
  LEIBKIT_STATUS_DIMENSION = 4,
  /**
   * Input violates an axiom or a precondition.
   */
  LEIBKIT_STATUS_AXIOM = 5,
  LEIBKIT_STATUS_NUMERIC = 6,
  LEIBKIT_STATUS_CAP = 7,
  LEIBKIT_STATUS_UNKNOWN_BUILTIN = 8,
  LEIBKIT_STATUS_IO = 9,
  LEIBKIT_STATUS_PANIC = 10,
} LeibkitStatus;

/**
 * Leibniz algebra over the rationals.
 */
typedef struct LeibkitAlgebra LeibkitAlgebra;

typedef struct LeibkitDigroup LeibkitDigroup;

/**
 * Linear Lie rack model with float matrices.
 */
typedef struct LeibkitModel LeibkitModel;

typedef struct LeibkitRack LeibkitRack;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after success.
 * The pointer stays valid until the next leibkit call on this thread.
 */
const char *leibkit_last_error(void);

/**
 * Static version string.
 */
const char *leibkit_version(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void leibkit_string_free(char *s);

/**
 * Parses an algebra file (JSON text).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_algebra_from_json(const char *json, struct LeibkitAlgebra **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_algebra_builtin(const char *name, struct LeibkitAlgebra **out);

/**
 * # Safety
 * `g` must come from this library or be null.
 */
void leibkit_algebra_free(struct LeibkitAlgebra *g);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_algebra_dim(const struct LeibkitAlgebra *g, size_t *out);

/**
 * Number of basis triples violating the Leibniz identity.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_algebra_check(const struct LeibkitAlgebra *g, size_t *violations);

/**
 * Dimensions of the squares ideal and of ker(ad).
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_algebra_ideals(const struct LeibkitAlgebra *g,
                                          size_t *squares_dim,
                                          size_t *ker_ad_dim);

/**
 * Whether a complementary Lie subalgebra exists over the squares ideal
 * (`over_ker_ad = false`) or over ker(ad) (`true`).
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_algebra_splits(const struct LeibkitAlgebra *g,
                                          bool over_ker_ad,
                                          bool *out);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_digroup_from_json(const char *json, struct LeibkitDigroup **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_digroup_builtin(const char *name, struct LeibkitDigroup **out);

/**
 * # Safety
 * `g` must come from this library or be null.
 */
void leibkit_digroup_free(struct LeibkitDigroup *g);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_digroup_size(const struct LeibkitDigroup *g, size_t *out);

/**
 * Number of violated instances of G1–G6.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_digroup_check(const struct LeibkitDigroup *g, size_t *violations);

/**
 * Sizes of the bar-unit set `E` and the inverse group `J`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_digroup_decompose(const struct LeibkitDigroup *g,
                                             size_t *e_size,
                                             size_t *j_size);

/**
 * Number of digroups of `order` up to isomorphism.
 *
 * # Safety
 * `out` must be writable.
 */
enum LeibkitStatus leibkit_enumerate_digroups(size_t order, size_t *out);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_rack_from_json(const char *json, struct LeibkitRack **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_rack_builtin(const char *name, struct LeibkitRack **out);

/**
 * # Safety
 * `q` must come from this library or be null.
 */
void leibkit_rack_free(struct LeibkitRack *q);

/**
 * Number of violated rack axiom instances.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_rack_check(const struct LeibkitRack *q, size_t *violations);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_model_from_json(const char *json, struct LeibkitModel **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LeibkitStatus leibkit_model_builtin(const char *name, struct LeibkitModel **out);

/**
 * # Safety
 * `m` must come from this library or be null.
 */
void leibkit_model_free(struct LeibkitModel *m);

/**
 * Max deviation of the recovered bracket from `Xv + [X, Y]` and max
 * error of the finite-difference `Φ`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LeibkitStatus leibkit_model_diff(const struct LeibkitModel *m,
                                      uint64_t seed,
                                      double *bracket_deviation,
                                      double *phi_residual);

/**
 * Runs a command-line invocation (without the program name) and returns
 * the JSON report and the exit code the binary would use. Argument errors
 * give status `Parse` and exit code 2.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; outputs must be writable.
 */
enum LeibkitStatus leibkit_run(const char *const *argv,
                               size_t argc,
                               char **report_json,
                               int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEIBKIT_H */

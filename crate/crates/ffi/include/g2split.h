#ifndef G2SPLIT_H
#define G2SPLIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum G2Status {
  G2_STATUS_OK = 0,
  G2_STATUS_NULL_POINTER = 1,
  G2_STATUS_INVALID_UTF8 = 2,
  G2_STATUS_INPUT = 3,
  G2_STATUS_EXACT = 4,
  G2_STATUS_GENUS2 = 5,
  G2_STATUS_ELLIPTIC = 6,
  G2_STATUS_RAMIFICATION = 7,
  G2_STATUS_VANISHING = 8,
  G2_STATUS_DEGENERATE = 9,
  G2_STATUS_OFF_VARIETY = 10,
  G2_STATUS_PANIC = 11,
} G2Status;

/**
 * A smooth or singular curve `Y^2 = f(x)` of degree 5 or 6.
 */
typedef struct G2Curve G2Curve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or null. Owned by
 * the library; valid until the next call.
 */
const char *g2_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void g2_string_free(char *s);

/**
 * Builds a curve from a JSON array of coefficients, low degree first.
 * Coefficients are integers, strings such as `"-3/4"`, or number-field
 * records `{"coeffs": [...], "min_poly": [...]}`.
 *
 * # Safety
 * `coeffs_json` must be a valid C string and `out` a valid pointer.
 */
enum G2Status g2_curve_new(const char *coeffs_json, struct G2Curve **out);

/**
 * # Safety
 * `curve` must come from [`g2_curve_new`] and not have been freed.
 */
void g2_curve_free(struct G2Curve *curve);

/**
 * `{"J2", "J4", "J6", "J10"}` as JSON.
 *
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
enum G2Status g2_curve_igusa(const struct G2Curve *curve, char **out);

/**
 * `{"i1", "i2", "i3"}` as JSON. Fails when `J2 = 0`.
 *
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
enum G2Status g2_curve_absolute(const struct G2Curve *curve, char **out);

/**
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
enum G2Status g2_curve_is_smooth(const struct G2Curve *curve, bool *out);

/**
 * Runs a `g2` command. `argv_json` is a JSON array of arguments without the
 * program name, e.g. `["deg3", "pair", "--j", "0"]`. The command's JSON
 * document goes to `out` and its exit code to `exit_code`; the status is
 * `Ok` whenever the command ran, whatever its exit code.
 *
 * # Safety
 * `argv_json` must be a valid C string; `out` and `exit_code` valid pointers.
 */
enum G2Status g2_run(const char *argv_json, char **out, int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* G2SPLIT_H */

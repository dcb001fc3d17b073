/* C interface to the tgc ternary-group library. */

#ifndef TGC_H
#define TGC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status of a call across the C boundary.
typedef enum TgcStatus {
  // The call succeeded and all out parameters are valid.
  TGC_STATUS_OK = 0,
  // The input was well formed but the queried property is false or the
  // requested object does not exist (e.g. no isomorphism).
  TGC_STATUS_PROPERTY_FALSE = 1,
  // Malformed input: parse errors, size mismatches, out-of-range indices,
  // unknown example names.
  TGC_STATUS_INVALID_INPUT = 2,
  // A required pointer argument was null.
  TGC_STATUS_NULL_POINTER = 3,
  // An internal invariant failed; this is a bug, not a user error.
  TGC_STATUS_INTERNAL_ERROR = 4,
} TgcStatus;

// Opaque handle to a validated Cayley cube.
typedef struct TgcCube TgcCube;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static nul-terminated string; do not free.
const char *tgc_version(void);

// Message describing the most recent failure on the calling thread.
// The pointer stays valid until the next failing call on the same thread;
// do not free.
const char *tgc_last_error_message(void);

// Builds a cube from `order³` entries in row-major order (`x` outermost,
// `z` innermost). Entries must lie in `0..order`.
//
// # Safety
// `entries` must point to `len` readable values; `out` must be writable.
enum TgcStatus tgc_cube_new(size_t order, const size_t *entries, size_t len, struct TgcCube **out);

// Parses the `tgc v1` text format.
//
// # Safety
// `text` must be a valid nul-terminated string; `out` must be writable.
enum TgcStatus tgc_cube_parse(const char *text, struct TgcCube **out);

// Builds one of the built-in example cubes by name.
//
// # Safety
// `name` must be a valid nul-terminated string; `out` must be writable.
enum TgcStatus tgc_cube_example(const char *name, struct TgcCube **out);

// Releases a cube handle. Null is accepted and ignored.
//
// # Safety
// `cube` must be null or a handle returned by a constructor, not yet freed.
void tgc_cube_free(struct TgcCube *cube);

// Order of the cube's carrier; 0 for a null handle.
//
// # Safety
// `cube` must be null or a live handle.
size_t tgc_cube_order(const struct TgcCube *cube);

// Looks up one product `[x y z]`.
//
// # Safety
// `cube` must be a live handle; `out` must be writable.
enum TgcStatus tgc_cube_get(const struct TgcCube *cube, size_t x, size_t y, size_t z, size_t *out);

// Writes `true` when the cube is a ternary group.
//
// # Safety
// `cube` must be a live handle; `out` must be writable.
enum TgcStatus tgc_cube_is_ternary_group(const struct TgcCube *cube, bool *out);

// Fills `out` (length `len`, which must equal the order) with the skew map.
// Returns `PropertyFalse` when the cube is not a ternary group.
//
// # Safety
// `cube` must be a live handle; `out` must point to `len` writable values.
enum TgcStatus tgc_cube_skew_map(const struct TgcCube *cube, size_t *out, size_t len);

// Serializes the cube in the `tgc v1` text format. Free with
// [`tgc_string_free`].
//
// # Safety
// `cube` must be a live handle; `out` must be writable.
enum TgcStatus tgc_cube_serialize(const struct TgcCube *cube, char **out);

// Full structural report (flags, identity sets, skew map, witnesses) as a
// JSON document. `force_medial` runs the mediality sweep regardless of the
// order bound. Free with [`tgc_string_free`].
//
// # Safety
// `cube` must be a live handle; `out` must be writable.
enum TgcStatus tgc_cube_report_json(const struct TgcCube *cube, bool force_medial, char **out);

// Searches for an isomorphism from `a` to `b` and fills `out_map` (length
// `len`, which must equal the common order) with the relabeling. Returns
// `PropertyFalse` when the cubes are proven non-isomorphic.
//
// # Safety
// `a` and `b` must be live handles; `out_map` must hold `len` writable
// values.
enum TgcStatus tgc_cube_isomorphism(const struct TgcCube *a,
                                    const struct TgcCube *b,
                                    size_t *out_map,
                                    size_t len);

// Releases a string returned by this library. Null is accepted and ignored.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void tgc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TGC_H */

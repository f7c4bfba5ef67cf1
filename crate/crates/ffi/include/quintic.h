#ifndef QUINTIC_H
#define QUINTIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QuinticStatus {
  QUINTIC_STATUS_OK = 0,
  // A required pointer argument was null.
  QUINTIC_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  QUINTIC_STATUS_INVALID_UTF8 = 2,
  // Polynomial or element text did not parse.
  QUINTIC_STATUS_PARSE = 3,
  // Invalid ring selection (characteristic, parameter, mismatched rings).
  QUINTIC_STATUS_RING = 4,
  // The computation is undefined for the input (repeated roots, A = 0, ...).
  QUINTIC_STATUS_MATH = 5,
  // Internal failure, including a caught panic.
  QUINTIC_STATUS_INTERNAL = 6,
} QuinticStatus;

// Univariate polynomial handle.
typedef struct QuinticPoly QuinticPoly;

// Coefficient field handle.
typedef struct QuinticRing QuinticRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL after a
// successful call. The pointer stays valid until the next call on the
// same thread; do not free it.
const char *quintic_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void quintic_string_free(char *s);

// Creates a ring: `ring` is "q" or "fp"; `p` is the characteristic for
// "fp" and must be 0 for "q"; `param` names the parameter of
// a rational function field, or is NULL.
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum QuinticStatus quintic_ring_new(const char *ring,
                                    uint64_t p,
                                    const char *param,
                                    struct QuinticRing **out);

// # Safety
// `ring` must come from [`quintic_ring_new`] and not have been freed.
void quintic_ring_free(struct QuinticRing *ring);

// The ring descriptor as JSON.
//
// # Safety
// `ring` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_ring_json(const struct QuinticRing *ring, char **out);

// Parses a univariate polynomial in `var` over `ring`.
//
// # Safety
// `ring` must be a live handle, strings NUL-terminated, `out` writable.
enum QuinticStatus quintic_poly_parse(const struct QuinticRing *ring,
                                      const char *text,
                                      const char *var,
                                      struct QuinticPoly **out);

// # Safety
// `poly` must come from this library and not have been freed.
void quintic_poly_free(struct QuinticPoly *poly);

// Canonical text of a polynomial (re-parses to the same value).
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_poly_to_string(const struct QuinticPoly *poly, char **out);

// `{"A","B","C","Delta","M","delta","q"}` as exact strings; delta and q
// are null when A or M vanishes.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_invariants_json(const struct QuinticPoly *poly, char **out);

// Full reduction certificate as JSON, with Galois evidence attached.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_reduce_json(const struct QuinticPoly *poly, char **out);

// Galois group label with its evidence record, as JSON.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_group_label_json(const struct QuinticPoly *poly, char **out);

// `{"disc": ..., "square_root": ... | null}`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_discriminant_json(const struct QuinticPoly *poly, char **out);

// Degree-10 resolvent of sums of two roots of a quintic.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum QuinticStatus quintic_resolvent2(const struct QuinticPoly *poly, struct QuinticPoly **out);

// Sets `*out` to 1 when `g` and `h` are certified to define the same
// stem field, else 0. Both must be over the same ring.
//
// # Safety
// `g`, `h` must be live handles; `out` must be writable.
enum QuinticStatus quintic_certify_same_field(const struct QuinticPoly *g,
                                              const struct QuinticPoly *h,
                                              int *out);

// Specializes a generic polynomial ("P1_S5", "P2_S5", "P1_A5", "P2_A5")
// at the bindings of a JSON object mapping symbols to element strings,
// e.g. `{"d": "3", "q": "5*(c-1)/(2*c+5)"}`.
//
// # Safety
// `ring` must be a live handle, strings NUL-terminated, `out` writable.
enum QuinticStatus quintic_specialize(const struct QuinticRing *ring,
                                      const char *template_,
                                      const char *bindings_json,
                                      int monic,
                                      struct QuinticPoly **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUINTIC_H */

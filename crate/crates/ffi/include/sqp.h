#ifndef SQP_H
#define SQP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes; the nonzero values match the exit codes of the `sqp` CLI
// where they overlap.
typedef enum SqpStatus {
  SQP_STATUS_OK = 0,
  SQP_STATUS_INPUT_ERROR = 2,
  SQP_STATUS_RESOURCE_ERROR = 3,
  SQP_STATUS_NULL_POINTER = 4,
  SQP_STATUS_INVALID_UTF8 = 5,
  SQP_STATUS_PANIC = 6,
} SqpStatus;

// Opaque handle to a monomial ideal together with its variable names.
typedef struct SqpIdeal SqpIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parse an ideal in the text (`vars:`/`gens:`) or JSON format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum SqpStatus sqp_ideal_parse(const char *text, struct SqpIdeal **out);

// Release a handle. Null is ignored.
//
// # Safety
// `ideal` must come from this library and not have been freed.
void sqp_ideal_free(struct SqpIdeal *ideal);

// Number of variables of the ambient ring; 0 for a null handle.
//
// # Safety
// `ideal` must be null or a live handle.
size_t sqp_ideal_num_vars(const struct SqpIdeal *ideal);

// Number of minimal generators; 0 for a null handle.
//
// # Safety
// `ideal` must be null or a live handle.
size_t sqp_ideal_num_gens(const struct SqpIdeal *ideal);

// The square power `I^[m]`, replacing each generator `x^a` by `x^(m·a)`.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_ideal_square_power(const struct SqpIdeal *ideal,
                                      uint64_t m,
                                      struct SqpIdeal **out);

// The ordinary power `I^s`.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_ideal_power(const struct SqpIdeal *ideal, uint32_t s, struct SqpIdeal **out);

// The intersection of two ideals in the same ring. The result keeps the
// variable names of `a`.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum SqpStatus sqp_ideal_intersect(const struct SqpIdeal *a,
                                   const struct SqpIdeal *b,
                                   struct SqpIdeal **out);

// Whether two handles hold the same ideal (variable names are ignored).
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum SqpStatus sqp_ideal_equal(const struct SqpIdeal *a, const struct SqpIdeal *b, bool *out);

// Canonical text form, `vars: ...` / `gens: ...`.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_ideal_to_text(const struct SqpIdeal *ideal, char **out);

// JSON form `{"n": .., "gens": [[..], ..]}`.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_ideal_to_json(const struct SqpIdeal *ideal, char **out);

// Graded Betti numbers of `R/I` over the field of the given characteristic
// (0 or a prime), as JSON `{"char": p, "entries": [[i, j, beta], ..]}`.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_betti_json(const struct SqpIdeal *ideal, uint64_t characteristic, char **out);

// The Betti diagram of `R/I` as aligned text.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_betti_diagram(const struct SqpIdeal *ideal, uint64_t characteristic, char **out);

// Regularity, projective dimension and depth of `R/I`.
//
// # Safety
// `ideal` must be a live handle; the three out-pointers must be writable.
enum SqpStatus sqp_invariants(const struct SqpIdeal *ideal,
                              uint64_t characteristic,
                              int64_t *reg,
                              size_t *pd,
                              size_t *depth);

// Primary decomposition as JSON `[{"radical": [..], "gens": [[..], ..]}, ..]`
// with 0-based variable indices.
//
// # Safety
// `ideal` must be a live handle; `out` must be writable.
enum SqpStatus sqp_primary_decomposition_json(const struct SqpIdeal *ideal, char **out);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void sqp_string_free(char *s);

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next call into this library on the same thread.
const char *sqp_last_error_message(void);

// Library version as a static nul-terminated string.
const char *sqp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQP_H */

#ifndef ARCDIAG_H
#define ARCDIAG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum ArcStatus {
  ARC_STATUS_OK = 0,
  ARC_STATUS_NULL_POINTER = 1,
  ARC_STATUS_INVALID_UTF8 = 2,
  ARC_STATUS_UNKNOWN_PRESET = 3,
  ARC_STATUS_SYNTAX = 4,
  ARC_STATUS_UNKNOWN_GENERATOR = 5,
  ARC_STATUS_ARITY_MISMATCH = 6,
  ARC_STATUS_PRESET_MISMATCH = 7,
  ARC_STATUS_TERM_LIMIT = 8,
  ARC_STATUS_INVALID_INPUT = 9,
  ARC_STATUS_UNDETERMINED = 10,
  ARC_STATUS_PANIC = 99,
} ArcStatus;

/**
 * A morphism in normal form, tied to the presentation it was built in.
 */
typedef struct ArcMorphism ArcMorphism;

/**
 * A preset together with its coefficient field.
 */
typedef struct ArcPresentation ArcPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library.
 */
const char *arcdiag_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void arcdiag_string_free(char *s);

/**
 * Creates a presentation. `field` may be null for the preset's default.
 *
 * # Safety
 * `preset` and `field` must be null or nul-terminated; `out` must be writable.
 */
enum ArcStatus arcdiag_presentation_new(const char *preset,
                                        const char *field,
                                        struct ArcPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from [`arcdiag_presentation_new`].
 */
void arcdiag_presentation_free(struct ArcPresentation *p);

/**
 * Parses and evaluates an expression such as `"x.y + z.z^*"`.
 *
 * # Safety
 * Pointers must be valid; `out` receives a new handle.
 */
enum ArcStatus arcdiag_eval(const struct ArcPresentation *pres,
                            const char *expr,
                            struct ArcMorphism **out);

/**
 * Reads a morphism in the JSON interchange format.
 *
 * # Safety
 * Pointers must be valid; `out` receives a new handle.
 */
enum ArcStatus arcdiag_morphism_from_json(const char *json, struct ArcMorphism **out);

/**
 * # Safety
 * `m` must be null or a morphism handle.
 */
void arcdiag_morphism_free(struct ArcMorphism *m);

/**
 * `upper ∘ lower`.
 *
 * # Safety
 * Pointers must be valid; `out` receives a new handle.
 */
enum ArcStatus arcdiag_compose(const struct ArcMorphism *upper,
                               const struct ArcMorphism *lower,
                               struct ArcMorphism **out);

/**
 * `left ⊗ right`.
 *
 * # Safety
 * Pointers must be valid; `out` receives a new handle.
 */
enum ArcStatus arcdiag_tensor(const struct ArcMorphism *left,
                              const struct ArcMorphism *right,
                              struct ArcMorphism **out);

/**
 * `a + b`.
 *
 * # Safety
 * Pointers must be valid; `out` receives a new handle.
 */
enum ArcStatus arcdiag_add(const struct ArcMorphism *a,
                           const struct ArcMorphism *b,
                           struct ArcMorphism **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_equal(const struct ArcMorphism *a, const struct ArcMorphism *b, bool *out);

/**
 * Source and target tensor powers.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_morphism_arity(const struct ArcMorphism *m, size_t *n, size_t *target);

/**
 * Number of basis terms.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_morphism_terms(const struct ArcMorphism *m, size_t *out);

/**
 * The normal form as an expression; free with [`arcdiag_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_morphism_print(const struct ArcMorphism *m, char **out);

/**
 * The interchange JSON; free with [`arcdiag_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_morphism_to_json(const struct ArcMorphism *m, char **out);

/**
 * Number of partial bijections between `n` and `m` points, saturated at
 * `u64::MAX`.
 */
uint64_t arcdiag_count_partial_bijections(size_t n, size_t m);

/**
 * Checks the splitting of `X^k` for the presentation's preset.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_verify_iso_pair(const struct ArcPresentation *pres, size_t k, bool *out);

/**
 * The class of `X^k` as a `"p/q"` string; free with [`arcdiag_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum ArcStatus arcdiag_k0_class(const struct ArcPresentation *pres, uint32_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARCDIAG_H */

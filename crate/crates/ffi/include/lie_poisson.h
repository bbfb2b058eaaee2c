#ifndef LIE_POISSON_H
#define LIE_POISSON_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LpStatus {
  LP_STATUS_OK = 0,
  LP_STATUS_NULL_POINTER = 1,
  LP_STATUS_INVALID_ARGUMENT = 2,
  LP_STATUS_INVALID_DIMENSION = 3,
  LP_STATUS_UNSUPPORTED = 4,
  LP_STATUS_NOT_SUBALGEBRA = 5,
  LP_STATUS_DEGENERATE_RESTRICTION = 6,
  LP_STATUS_PARSE = 7,
  LP_STATUS_CAP_EXCEEDED = 8,
  LP_STATUS_INTERNAL = 9,
  LP_STATUS_PANIC = 10,
} LpStatus;

/**
 * Same numbering as the command-line exit codes.
 */
typedef enum LpVerdict {
  LP_VERDICT_COMMUTATIVE = 0,
  LP_VERDICT_NOT_COMMUTATIVE = 2,
  LP_VERDICT_UNDECIDED = 3,
} LpVerdict;

typedef struct LpAlgebra LpAlgebra;

typedef struct LpInvariants LpInvariants;

typedef struct LpPoly LpPoly;

typedef struct LpSplitting LpSplitting;

typedef struct LpSubalgebra LpSubalgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Free with `lp_string_free`.
 */
char *lp_last_error_message(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void lp_string_free(char *s);

/**
 * `name` is `glN` or `slN`.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum LpStatus lp_algebra_classical(const char *name, struct LpAlgebra **out);

/**
 * # Safety
 * `path` is a NUL-terminated string; `out` is writable.
 */
enum LpStatus lp_algebra_from_structure_file(const char *path, struct LpAlgebra **out);

/**
 * Dimension, or 0 for a null handle.
 *
 * # Safety
 * `g` is null or a live handle.
 */
size_t lp_algebra_dim(const struct LpAlgebra *g);

/**
 * Index from `trials` seeded points in `[-bound, bound]`.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum LpStatus lp_algebra_index(const struct LpAlgebra *g,
                               size_t trials,
                               uint64_t seed,
                               int64_t bound,
                               size_t *out);

/**
 * `(dim + index) / 2`.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum LpStatus lp_algebra_b(const struct LpAlgebra *g, size_t index, size_t *out);

/**
 * # Safety
 * `g` is null or a live handle, not used afterwards.
 */
void lp_algebra_free(struct LpAlgebra *g);

/**
 * Diagonal Cartan subalgebra of `gl_n` or `sl_n`.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum LpStatus lp_splitting_cartan(const struct LpAlgebra *g, struct LpSplitting **out);

/**
 * `sl_2` in the lower-right 2x2 block.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum LpStatus lp_splitting_lower_right_sl2(const struct LpAlgebra *g, struct LpSplitting **out);

/**
 * # Safety
 * `s` is null or a live handle, not used afterwards.
 */
void lp_splitting_free(struct LpSplitting *s);

/**
 * `tr X^k` for `k = 1..n` (`2..n` for `sl_n`).
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum LpStatus lp_invariants_trace_powers(const struct LpAlgebra *g, struct LpInvariants **out);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `inv` is null or a live handle.
 */
size_t lp_invariants_len(const struct LpInvariants *inv);

/**
 * Canonical text of generator `i`.
 *
 * # Safety
 * `inv` is a live handle; `out` is writable.
 */
enum LpStatus lp_invariants_get_poly_text(const struct LpInvariants *inv, size_t i, char **out);

/**
 * # Safety
 * `inv` is null or a live handle, not used afterwards.
 */
void lp_invariants_free(struct LpInvariants *inv);

/**
 * All nonzero bihomogeneous components of the invariants.
 *
 * # Safety
 * `inv`, `split` are live handles over the same algebra; `out` is writable.
 */
enum LpStatus lp_subalgebra_z(const struct LpInvariants *inv,
                              const struct LpSplitting *split,
                              size_t term_cap,
                              struct LpSubalgebra **out);

/**
 * `Z` with the pure-Cartan components replaced by a basis of `t`; needs a Cartan splitting.
 *
 * # Safety
 * `inv`, `split` are live handles over the same algebra; `out` is writable.
 */
enum LpStatus lp_subalgebra_ztilde(const struct LpInvariants *inv,
                                   const struct LpSplitting *split,
                                   struct LpSubalgebra **out);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `sub` is null or a live handle.
 */
size_t lp_subalgebra_len(const struct LpSubalgebra *sub);

/**
 * Exhaustive pairwise brackets of the generators.
 *
 * # Safety
 * `sub` is a live handle; `out` is writable.
 */
enum LpStatus lp_subalgebra_pair_report(const struct LpSubalgebra *sub,
                                        size_t term_cap,
                                        uint64_t seed,
                                        enum LpVerdict *out);

/**
 * # Safety
 * `sub` is null or a live handle, not used afterwards.
 */
void lp_subalgebra_free(struct LpSubalgebra *sub);

/**
 * Commutativity of `Z` decided through the criterion polynomials.
 *
 * # Safety
 * `inv`, `split` are live handles over the same algebra; `out` is writable.
 */
enum LpStatus lp_criterion_verdict(const struct LpInvariants *inv,
                                   const struct LpSplitting *split,
                                   size_t term_cap,
                                   uint64_t seed,
                                   enum LpVerdict *out);

/**
 * Parse text such as `2*x[0]^2 - x[1]*x[2]` in `nvars` variables.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum LpStatus lp_poly_parse(const char *text, size_t nvars, struct LpPoly **out);

/**
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum LpStatus lp_poly_to_string(const struct LpPoly *p, char **out);

/**
 * Lie-Poisson bracket `{a, b}` on the dual of `g`.
 *
 * # Safety
 * All handles are live; `out` is writable.
 */
enum LpStatus lp_poly_bracket(const struct LpAlgebra *g,
                              const struct LpPoly *a,
                              const struct LpPoly *b,
                              size_t term_cap,
                              struct LpPoly **out);

/**
 * # Safety
 * `p` is null or a live handle, not used afterwards.
 */
void lp_poly_free(struct LpPoly *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIE_POISSON_H */

/* C interface of the eqgb equivariant Groebner basis engine. */

#ifndef EQGB_H
#define EQGB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes: `Ok`, `BudgetExhausted` and `False` match the CLI exit
 * codes 0, 2 and 3; everything else reports through `InvalidInput`,
 * `NullPointer` or `Panic`.
 */
typedef enum EqgbStatus {
  EQGB_STATUS_OK = 0,
  EQGB_STATUS_INVALID_INPUT = 1,
  EQGB_STATUS_BUDGET_EXHAUSTED = 2,
  EQGB_STATUS_FALSE = 3,
  EQGB_STATUS_NULL_POINTER = 4,
  EQGB_STATUS_PANIC = 5,
} EqgbStatus;

/**
 * Opaque handle to a parsed problem file.
 */
typedef struct EqgbProblem EqgbProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *eqgb_last_error(void);

/**
 * Library version as a static string; do not free.
 */
const char *eqgb_version(void);

/**
 * Parses a problem file from JSON into an opaque handle. The problem is
 * validated eagerly, so later calls cannot fail on malformed input.
 */
enum EqgbStatus eqgb_problem_parse(const char *json, struct EqgbProblem **out);

/**
 * Frees a problem handle. Null is ignored.
 */
void eqgb_problem_free(struct EqgbProblem *problem);

/**
 * Frees a string returned by this library. Null is ignored.
 */
void eqgb_string_free(char *s);

/**
 * Re-serializes the parsed problem (round-trip check for bindings).
 */
enum EqgbStatus eqgb_problem_to_json(const struct EqgbProblem *problem, char **out_json);

/**
 * Computes the equivariant Groebner basis; the JSON document lands in
 * `out_json`. `BudgetExhausted` still writes the document.
 */
enum EqgbStatus eqgb_gb(const struct EqgbProblem *problem, char **out_json);

/**
 * Division with remainder of a target polynomial (JSON term list).
 */
enum EqgbStatus eqgb_reduce(const struct EqgbProblem *problem,
                            const char *target_json,
                            bool assume_basis,
                            char **out_json);

/**
 * Ideal membership. `Ok` means member, `False` means not; the boolean also
 * lands in `out_member` when non-null.
 */
enum EqgbStatus eqgb_member(const struct EqgbProblem *problem,
                            const char *target_json,
                            bool assume_basis,
                            bool *out_member,
                            char **out_json);

/**
 * All images of the generators within the width.
 */
enum EqgbStatus eqgb_expand(const struct EqgbProblem *problem, uint32_t width, char **out_json);

/**
 * Truncation cross-check against the classical finite Buchberger.
 * `Ok` = consistent, `False` = inconsistent.
 */
enum EqgbStatus eqgb_verify(const struct EqgbProblem *problem,
                            uint32_t width,
                            bool *out_consistent,
                            char **out_json);

/**
 * Decides a well-partial-order relation from a JSON subject (`relation`,
 * `poset`, `a`, `b`). `Ok` = related, `False` = not related.
 */
enum EqgbStatus eqgb_wpo(const char *subject_json, bool *out_result, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQGB_H */

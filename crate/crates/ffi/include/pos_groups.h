#ifndef POS_GROUPS_H
#define POS_GROUPS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 *
 * `NotPos` is a success code: the call worked and the answer is "no".
 */
typedef enum PosStatus {
  POS_STATUS_OK = 0,
  POS_STATUS_NOT_POS = 1,
  POS_STATUS_INVALID_INPUT = 2,
  POS_STATUS_BUDGET_EXCEEDED = 3,
  POS_STATUS_HYPOTHESIS_VIOLATED = 4,
  POS_STATUS_NULL_POINTER = 5,
  POS_STATUS_INVALID_UTF8 = 6,
  POS_STATUS_PANIC = 7,
} PosStatus;

/**
 * Opaque group handle.
 */
typedef struct PosGroup PosGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a group spec such as `"c6c7"` or `"thm32:5,2,1"` and builds the group.
 *
 * `budget` caps generator closures for `perm:` specs. On success `*out`
 * owns a handle to release with [`pos_group_free`].
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PosStatus pos_group_new(const char *spec, uint64_t budget, struct PosGroup **out);

/**
 * Releases a handle from [`pos_group_new`]. Null is ignored.
 *
 * # Safety
 * `group` must come from [`pos_group_new`] and not be used afterwards.
 */
void pos_group_free(struct PosGroup *group);

/**
 * Group order as a decimal string.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum PosStatus pos_group_order(const struct PosGroup *group, char **out);

/**
 * Spectrum document as JSON.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum PosStatus pos_group_spectrum_json(const struct PosGroup *group, uint64_t budget, char **out);

/**
 * POS report as JSON. Returns `Ok` or `NotPos` according to the verdict.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum PosStatus pos_group_check_json(const struct PosGroup *group, uint64_t budget, char **out);

/**
 * POS verdict only: `Ok` for a POS-group, `NotPos` otherwise.
 *
 * # Safety
 * `group` must be a live handle.
 */
enum PosStatus pos_group_is_pos(const struct PosGroup *group, uint64_t budget);

/**
 * Non-POS witness for `A_n` as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PosStatus pos_witness_json(uint64_t n, char **out);

/**
 * Feasibility report for one order as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PosStatus pos_feasibility_json(uint64_t n, char **out);

/**
 * Feasible orders in `min..=max` as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PosStatus pos_scan_json(uint64_t min, uint64_t max, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pos_string_free(char *s);

/**
 * Message for the last failed call on this thread, or an empty string.
 *
 * The pointer stays valid until the next call into this library on the
 * same thread. Do not free it.
 */
const char *pos_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POS_GROUPS_H */

#ifndef QBF_GAMES_H
#define QBF_GAMES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Source games accepted by [`qbf_reduce`].
 */
typedef enum QbfReduction {
  /**
   * Graph text to by-player-anywhere-same.
   */
  QBF_REDUCTION_SNORT = 0,
  /**
   * Graph text to either-anywhere-same.
   */
  QBF_REDUCTION_PROPER_TWO_COLORING = 1,
  /**
   * CNF formula file text to either-local-same.
   */
  QBF_REDUCTION_QBF_CNF = 2,
  /**
   * Positive CNF formula file text to by-player-anywhere-different.
   */
  QBF_REDUCTION_POSITIVE_CNF = 3,
  /**
   * Positive CNF formula file text to either-anywhere-different.
   */
  QBF_REDUCTION_TOY_POSITIVE_CNF = 4,
} QbfReduction;

/**
 * Result codes.
 */
typedef enum QbfStatus {
  QBF_STATUS_OK = 0,
  QBF_STATUS_NULL_POINTER = 1,
  QBF_STATUS_INVALID_UTF8 = 2,
  QBF_STATUS_PARSE_ERROR = 3,
  QBF_STATUS_ILLEGAL_MOVE = 4,
  QBF_STATUS_NOT_TERMINAL = 5,
  QBF_STATUS_BUDGET_EXCEEDED = 6,
  QBF_STATUS_BUFFER_TOO_SMALL = 7,
  QBF_STATUS_INVALID_ARGUMENT = 8,
  QBF_STATUS_PANIC = 9,
} QbfStatus;

/**
 * Opaque game position.
 */
typedef struct QbfPosition QbfPosition;

/**
 * Assignment of `value` to variable `var`.
 */
typedef struct QbfMove {
  size_t var;
  bool value;
} QbfMove;

/**
 * Solver summary. `winner` is 1 or 2.
 */
typedef struct QbfSolveResult {
  uint8_t winner;
  uint64_t nodes;
  /**
   * Length of the principal variation, whether or not it fit the buffer.
   */
  size_t pv_len;
} QbfSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a position file, or a formula file when `ruleset` is non-null.
 * A non-null `ruleset` also overrides the ruleset line of a position file.
 *
 * # Safety
 * `text` must be a NUL-terminated string, `ruleset` null or NUL-terminated,
 * and `out` a valid pointer to write the new handle to.
 */
enum QbfStatus qbf_position_parse(const char *text, const char *ruleset, struct QbfPosition **out);

/**
 * Builds the initial position of `formula` over `n` variables.
 *
 * # Safety
 * `formula` and `ruleset` must be NUL-terminated strings and `out` a valid
 * pointer to write the new handle to.
 */
enum QbfStatus qbf_position_new(const char *formula,
                                size_t n,
                                const char *ruleset,
                                struct QbfPosition **out);

/**
 * Copies a position.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum QbfStatus qbf_position_clone(const struct QbfPosition *p, struct QbfPosition **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void qbf_position_free(struct QbfPosition *p);

/**
 * Serializes a position in the position file format. Returns null on
 * failure; free the result with [`qbf_string_free`].
 *
 * # Safety
 * `p` must be a live handle.
 */
char *qbf_position_to_text(const struct QbfPosition *p);

/**
 * Writes the simplified formula. Returns null on failure; free the result
 * with [`qbf_string_free`].
 *
 * # Safety
 * `p` must be a live handle.
 */
char *qbf_position_simplified(const struct QbfPosition *p);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void qbf_string_free(char *s);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t qbf_position_num_vars(const struct QbfPosition *p);

/**
 * Player to move (1 or 2), or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
uint8_t qbf_position_mover(const struct QbfPosition *p);

/**
 * Writes the legal moves to `buf` in ascending variable order, false
 * before true. `*count` always receives the number of legal moves; when it
 * exceeds `capacity` nothing is written and `BufferTooSmall` is returned.
 *
 * # Safety
 * `p` must be a live handle, `count` valid, and `buf` valid for `capacity`
 * elements (it may be null when `capacity` is 0).
 */
enum QbfStatus qbf_position_legal_moves(const struct QbfPosition *p,
                                        struct QbfMove *buf,
                                        size_t capacity,
                                        size_t *count);

/**
 * Plays a move in place. On `IllegalMove` the position is unchanged.
 *
 * # Safety
 * `p` must be a live handle.
 */
enum QbfStatus qbf_position_apply(struct QbfPosition *p, size_t var, bool value);

/**
 * Writes whether the game is over.
 *
 * # Safety
 * `p` must be a live handle and `out` valid.
 */
enum QbfStatus qbf_position_is_terminal(const struct QbfPosition *p, bool *out);

/**
 * Writes the winner (1 or 2) of a finished game.
 *
 * # Safety
 * `p` must be a live handle and `out` valid.
 */
enum QbfStatus qbf_position_winner(const struct QbfPosition *p, uint8_t *out);

/**
 * Solves a position under optimal play. A `node_budget` of 0 selects the
 * default. When `pv_buf` is non-null and large enough the principal
 * variation is copied into it; `result.pv_len` always holds its length.
 *
 * # Safety
 * `p` must be a live handle, `result` valid, and `pv_buf` null or valid for
 * `pv_capacity` elements.
 */
enum QbfStatus qbf_solve(const struct QbfPosition *p,
                         uint64_t node_budget,
                         struct QbfSolveResult *result,
                         struct QbfMove *pv_buf,
                         size_t pv_capacity);

/**
 * Reduces a source-game instance to a position. `first_mover` (1 or 2)
 * picks who starts Snort and the Positive CNF games; Proper 2-Coloring
 * and QBF ignore it.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QbfStatus qbf_reduce(enum QbfReduction kind,
                          const char *text,
                          uint8_t first_mover,
                          struct QbfPosition **out);

/**
 * Description of the last failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *qbf_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QBF_GAMES_H */

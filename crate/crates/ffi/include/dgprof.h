/* C interface for the dgprof distance-game enumeration engine. */

#ifndef DGPROF_H
#define DGPROF_H

/* Generated by cbindgen from dgprof-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum DgpStatus {
  // Success.
  DGP_STATUS_OK = 0,
  // A required pointer argument was NULL.
  DGP_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  DGP_STATUS_INVALID_UTF8 = 2,
  // A game id, board spec, family, or regex failed to parse.
  DGP_STATUS_PARSE_ERROR = 3,
  // The board exceeds the enumeration size limit.
  DGP_STATUS_LIMIT_EXCEEDED = 4,
  // Arguments were structurally valid but unusable (e.g. a two-vertex
  // cycle or a star over an epsilon-accepting regex).
  DGP_STATUS_INVALID_ARGUMENT = 5,
  // An internal invariant failed; this is a bug.
  DGP_STATUS_INTERNAL_ERROR = 6,
} DgpStatus;

// Opaque board handle.
typedef struct DgpBoard DgpBoard;

// Opaque profile handle.
typedef struct DgpProfile DgpProfile;

// Opaque rule-set handle.
typedef struct DgpRules DgpRules;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates the path P_n.
//
// # Safety
// `out` must be valid for a single write.
enum DgpStatus dgp_board_new_path(size_t n, struct DgpBoard **out);

// Creates the cycle C_n (n >= 3).
//
// # Safety
// `out` must be valid for a single write.
enum DgpStatus dgp_board_new_cycle(size_t n, struct DgpBoard **out);

// Creates the star with `leaves` outer vertices (vertex 0 is the center).
//
// # Safety
// `out` must be valid for a single write.
enum DgpStatus dgp_board_new_star(size_t leaves, struct DgpBoard **out);

// Creates the complete bipartite board K_{m,n} (m, n >= 1).
//
// # Safety
// `out` must be valid for a single write.
enum DgpStatus dgp_board_new_complete_bipartite(size_t m, size_t n, struct DgpBoard **out);

// Creates a board from `edge_count` edges given as flattened endpoint
// pairs u0, v0, u1, v1, ...; duplicate edges collapse, self-loops are
// rejected.
//
// # Safety
// `endpoints` must point to `2 * edge_count` readable values (or be NULL
// when `edge_count` is 0); `out` must be valid for a single write.
enum DgpStatus dgp_board_from_edges(size_t n,
                                    const size_t *endpoints,
                                    size_t edge_count,
                                    struct DgpBoard **out);

// Creates a board from a spec string: `path:N`, `cycle:N`, `star:N`,
// `kbip:M,N`, or `file:PATH`.
//
// # Safety
// `spec` must be a valid NUL-terminated string; `out` must be valid for a
// single write.
enum DgpStatus dgp_board_parse_spec(const char *spec, struct DgpBoard **out);

// Writes the number of vertices.
//
// # Safety
// `board` must be a live handle; `out` must be valid for a single write.
enum DgpStatus dgp_board_vertex_count(const struct DgpBoard *board, size_t *out);

// Writes the number of edges.
//
// # Safety
// `board` must be a live handle; `out` must be valid for a single write.
enum DgpStatus dgp_board_edge_count(const struct DgpBoard *board, size_t *out);

// Writes whether the board is bipartite.
//
// # Safety
// `board` must be a live handle; `out` must be valid for a single write.
enum DgpStatus dgp_board_is_bipartite(const struct DgpBoard *board, bool *out);

// Releases a board handle. NULL is a no-op.
//
// # Safety
// `board` must be NULL or a handle not yet freed.
void dgp_board_free(struct DgpBoard *board);

// Parses a game id (`col`, `snort`, `cis`, `cis2`, `encol:k`, `ensnort:k`,
// `encis:k`) into a rule-set handle.
//
// # Safety
// `id` must be a valid NUL-terminated string; `out` must be valid for a
// single write.
enum DgpStatus dgp_rules_parse(const char *id, struct DgpRules **out);

// Writes the display name of the rule set (e.g. "EnCis(2)").
//
// # Safety
// `rules` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_rules_display_name(const struct DgpRules *rules, char **out);

// Releases a rule-set handle. NULL is a no-op.
//
// # Safety
// `rules` must be NULL or a handle not yet freed.
void dgp_rules_free(struct DgpRules *rules);

// Computes the profile of the game on the board by brute-force
// enumeration. `limit` caps the board size; pass 0 for the default cap.
//
// # Safety
// `board` and `rules` must be live handles; `out` must be valid for a
// single write.
enum DgpStatus dgp_profile_brute_force(const struct DgpBoard *board,
                                       const struct DgpRules *rules,
                                       size_t limit,
                                       struct DgpProfile **out);

// Computes the profile of `game` on `board_spec` through the cheapest
// route: a closed-form recursion when one applies, else brute force under
// the default size limit.
//
// # Safety
// `game` and `board_spec` must be valid NUL-terminated strings; `out` must
// be valid for a single write.
enum DgpStatus dgp_profile_compute(const char *game,
                                   const char *board_spec,
                                   struct DgpProfile **out);

// Restricts a profile to alternating play (blue and red counts differing
// by at most one) as a new handle.
//
// # Safety
// `profile` must be a live handle; `out` must be valid for a single write.
enum DgpStatus dgp_profile_alternating_part(const struct DgpProfile *profile,
                                            struct DgpProfile **out);

// Writes the total position count as a decimal string.
//
// # Safety
// `profile` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_profile_total(const struct DgpProfile *profile, char **out);

// Writes the coefficient of x^blue y^red as a decimal string ("0" when the
// term is absent).
//
// # Safety
// `profile` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_profile_coefficient(const struct DgpProfile *profile,
                                       uint32_t blue,
                                       uint32_t red,
                                       char **out);

// Writes the number of stored (nonzero) terms.
//
// # Safety
// `profile` must be a live handle; `out` must be valid for a single write.
enum DgpStatus dgp_profile_term_count(const struct DgpProfile *profile, size_t *out);

// Writes the canonical text form, e.g.
// "1 + 4x + 4y + 3x^2 + 6xy + 3y^2".
//
// # Safety
// `profile` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_profile_text(const struct DgpProfile *profile, char **out);

// Writes the profile as a JSON term list:
// `[{"blue":0,"red":0,"count":"1"}, ...]`.
//
// # Safety
// `profile` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_profile_json(const struct DgpProfile *profile, char **out);

// Writes the univariate collapse (counts by total piece count) as a JSON
// array of decimal strings, e.g. `["1","8","12"]`.
//
// # Safety
// `profile` must be a live handle; `out` receives a string to free with
// [`dgp_string_free`].
enum DgpStatus dgp_profile_univariate_json(const struct DgpProfile *profile, char **out);

// Releases a profile handle. NULL is a no-op.
//
// # Safety
// `profile` must be NULL or a handle not yet freed.
void dgp_profile_free(struct DgpProfile *profile);

// Expands a builtin generating function (`cis_path`, `encis:2`, ... or
// `regex:EXPR`) to the given order and writes a JSON array with one term
// list per order.
//
// # Safety
// `family` must be a valid NUL-terminated string; `out` receives a string
// to free with [`dgp_string_free`].
enum DgpStatus dgp_series_expand_json(const char *family, size_t order, char **out);

// Expands a builtin generating function at x = y = 1 and writes a JSON
// array of decimal position counts, one per order.
//
// # Safety
// `family` must be a valid NUL-terminated string; `out` receives a string
// to free with [`dgp_string_free`].
enum DgpStatus dgp_series_counts_json(const char *family, size_t order, char **out);

// Releases a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void dgp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DGPROF_H */

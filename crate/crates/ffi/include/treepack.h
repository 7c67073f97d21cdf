#ifndef TREEPACK_H
#define TREEPACK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TreepackStatus {
  TREEPACK_STATUS_OK = 0,
  TREEPACK_STATUS_NULL_POINTER = 1,
  TREEPACK_STATUS_INVALID_UTF8 = 2,
  TREEPACK_STATUS_PARSE_ERROR = 3,
  TREEPACK_STATUS_INVALID_ARGUMENT = 4,
  TREEPACK_STATUS_DISCONNECTED = 5,
  TREEPACK_STATUS_BUFFER_TOO_SMALL = 6,
  TREEPACK_STATUS_LIMIT_EXCEEDED = 7,
  TREEPACK_STATUS_PANIC = 8,
} TreepackStatus;

typedef enum TreepackVerdict {
  TREEPACK_VERDICT_CONSISTENT = 0,
  TREEPACK_VERDICT_INDETERMINATE = 2,
  TREEPACK_VERDICT_COUNTEREXAMPLE = 3,
} TreepackVerdict;

/**
 * Opaque graph handle.
 */
typedef struct TreepackGraph TreepackGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *treepack_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *treepack_version(void);

/**
 * Parses one graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TreepackStatus treepack_graph_from_graph6(const char *text, struct TreepackGraph **out);

/**
 * Parses the `n m` header plus `u v` lines edge-list format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TreepackStatus treepack_graph_from_edge_list(const char *text, struct TreepackGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `pairs` (`2 * edge_count` entries). Duplicate pairs collapse.
 *
 * # Safety
 * `pairs` must point to `2 * edge_count` readable values (may be null when
 * `edge_count` is 0) and `out` must be writable.
 */
enum TreepackStatus treepack_graph_from_edges(size_t n,
                                              const size_t *pairs,
                                              size_t edge_count,
                                              struct TreepackGraph **out);

/**
 * `K_n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TreepackStatus treepack_complete_graph(size_t n, struct TreepackGraph **out);

/**
 * Two cliques `K_{delta+1}` and `K_{n-delta-1}` with `i` cross edges from
 * one hub vertex.
 *
 * # Safety
 * `out` must be writable.
 */
enum TreepackStatus treepack_book_graph(size_t n,
                                        size_t delta,
                                        size_t i,
                                        struct TreepackGraph **out);

/**
 * `K_k` joined to `K_k` plus `n - 2k` isolated vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum TreepackStatus treepack_join_candidate(size_t n, size_t k, struct TreepackGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void treepack_graph_free(struct TreepackGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_graph_vertex_count(const struct TreepackGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_graph_edge_count(const struct TreepackGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_graph_min_degree(const struct TreepackGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_graph_is_connected(const struct TreepackGraph *g, bool *out);

/**
 * graph6 encoding of the graph.
 *
 * # Safety
 * `g` must be a live handle, `needed` writable and `buffer` valid for
 * `capacity` bytes.
 */
enum TreepackStatus treepack_graph_to_graph6(const struct TreepackGraph *g,
                                             char *buffer,
                                             size_t capacity,
                                             size_t *needed);

/**
 * Largest adjacency eigenvalue.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_spectral_radius(const struct TreepackGraph *g, double *out);

/**
 * Exact number of spanning trees as a decimal string.
 *
 * # Safety
 * `g` must be a live handle, `needed` writable and `buffer` valid for
 * `capacity` bytes.
 */
enum TreepackStatus treepack_spanning_tree_count(const struct TreepackGraph *g,
                                                 char *buffer,
                                                 size_t capacity,
                                                 size_t *needed);

/**
 * Maximum number of edge-disjoint spanning trees.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_packing_number(const struct TreepackGraph *g, size_t *out);

/**
 * Edges of a maximum packing, flat as `u0 v0 u1 v1 ...`, tree after tree
 * (`n - 1` edges each). `needed` receives the number of values required.
 *
 * # Safety
 * `g` must be a live handle, `needed` writable and `pairs` valid for
 * `capacity` values.
 */
enum TreepackStatus treepack_packing_trees(const struct TreepackGraph *g,
                                           size_t *pairs,
                                           size_t capacity,
                                           size_t *needed);

/**
 * Minimum number of forests covering the edges.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_arboricity(const struct TreepackGraph *g, size_t *out);

/**
 * Global minimum edge cut. Needs at least two vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_edge_connectivity(const struct TreepackGraph *g, size_t *out);

/**
 * Edge-count check for `k` disjoint spanning trees.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_check_edge_theorem(const struct TreepackGraph *g,
                                                size_t k,
                                                enum TreepackVerdict *out);

/**
 * Spectral check for `k` disjoint spanning trees.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TreepackStatus treepack_check_spectral_theorem(const struct TreepackGraph *g,
                                                    size_t k,
                                                    enum TreepackVerdict *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TREEPACK_H */

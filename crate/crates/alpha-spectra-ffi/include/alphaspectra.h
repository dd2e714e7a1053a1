#ifndef ALPHASPECTRA_H
#define ALPHASPECTRA_H

/* Generated by cbindgen from the alpha-spectra-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status code returned by every fallible entry point.
 */
typedef enum AspecStatus {
  /*
   The call succeeded.
   */
  ASPEC_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  ASPEC_STATUS_NULL_ARGUMENT = 1,
  /*
   The input could not be parsed or violates a precondition.
   */
  ASPEC_STATUS_INVALID_INPUT = 2,
  /*
   A numeric index or parameter is outside its valid range.
   */
  ASPEC_STATUS_OUT_OF_RANGE = 3,
  /*
   An eigenvalue computation failed to converge.
   */
  ASPEC_STATUS_NUMERIC_FAILURE = 4,
  /*
   The caller-provided buffer is too small; retry with the reported size.
   */
  ASPEC_STATUS_BUFFER_TOO_SMALL = 5,
  /*
   The implementation panicked; the handle state is unchanged.
   */
  ASPEC_STATUS_INTERNAL = 6,
} AspecStatus;

/*
 Opaque graph handle; create with the constructors, release with
 `aspec_graph_free`.
 */
typedef struct AspecGraph AspecGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copies the thread-local message for the most recent failure into `buf`
 (NUL-terminated, truncating if needed) and reports the full length,
 excluding the terminator, through `written`. Null `buf` with zero `len`
 just measures.

 # Safety
 `buf` must point to `len` writable bytes when non-null; `written` must be
 null or valid for writes.
 */
enum AspecStatus aspec_last_error_message(char *buf, size_t len, size_t *written);

/*
 Builds a graph on `n` vertices from `edge_count` pairs of endpoint
 indices laid out as `u0, v0, u1, v1, ...`. On success stores a new handle
 through `out`.

 # Safety
 `edges` must point to `2 * edge_count` readable `uint32_t` values (or be
 null when `edge_count` is zero); `out` must be valid for writes.
 */
enum AspecStatus aspec_graph_from_edges(size_t n,
                                        const uint32_t *edges,
                                        size_t edge_count,
                                        struct AspecGraph **out);

/*
 Parses a single NUL-terminated graph6 line into a new handle.

 # Safety
 `text` must be a valid NUL-terminated string; `out` must be valid for
 writes.
 */
enum AspecStatus aspec_graph_from_graph6(const char *text, struct AspecGraph **out);

/*
 Encodes the graph as graph6 into `buf` (NUL-terminated) and reports the
 text length, excluding the terminator, through `written`.

 # Safety
 `g` must be a live handle; `buf` must point to `len` writable bytes when
 non-null; `written` must be null or valid for writes.
 */
enum AspecStatus aspec_graph_to_graph6(const struct AspecGraph *g,
                                       char *buf,
                                       size_t len,
                                       size_t *written);

/*
 Releases a handle created by any constructor. Null is a no-op.

 # Safety
 `g` must be null or a pointer returned by a constructor, released at most
 once.
 */
void aspec_graph_free(struct AspecGraph *g);

/*
 Builds the complement graph as a new handle.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_graph_complement(const struct AspecGraph *g, struct AspecGraph **out);

/*
 Reports the number of vertices.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_graph_vertex_count(const struct AspecGraph *g, size_t *out);

/*
 Reports the number of edges.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_graph_edge_count(const struct AspecGraph *g, size_t *out);

/*
 Reports the matching number.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_graph_matching_number(const struct AspecGraph *g, size_t *out);

/*
 Writes the eigenvalues of `alpha * D + (1 - alpha) * A` in descending
 order into `buf`, which must hold at least `vertex_count` doubles; the
 count written is reported through `written`.

 # Safety
 `g` must be a live handle; `buf` must point to `len` writable doubles;
 `written` must be null or valid for writes.
 */
enum AspecStatus aspec_spectrum(const struct AspecGraph *g,
                                double alpha,
                                double *buf,
                                size_t len,
                                size_t *written);

/*
 Computes the sum of the `k` largest eigenvalues of the pencil at `alpha`.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_sk(const struct AspecGraph *g, double alpha, size_t k, double *out);

/*
 Computes the energy-style deviation of the pencil spectrum at `alpha`.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_alpha_energy(const struct AspecGraph *g, double alpha, double *out);

/*
 Computes the smallest `alpha` at which the pencil is positive
 semidefinite, to absolute tolerance `tol` (pass 0 for the 1e-10 default).

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum AspecStatus aspec_alpha0(const struct AspecGraph *g, double tol, double *out);

/*
 Evaluates one bound-catalog entry (by its id string, e.g. `"U-3.2"`) at
 `(alpha, k)` and serializes the full record as JSON into `buf`
 (NUL-terminated), reporting the text length through `written`.

 # Safety
 `g` must be a live handle; `id` must be a valid NUL-terminated string;
 `buf` must point to `len` writable bytes when non-null; `written` must be
 null or valid for writes.
 */
enum AspecStatus aspec_bound_record_json(const struct AspecGraph *g,
                                         const char *id,
                                         double alpha,
                                         size_t k,
                                         char *buf,
                                         size_t len,
                                         size_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALPHASPECTRA_H */

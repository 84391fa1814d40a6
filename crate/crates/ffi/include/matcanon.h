#ifndef MATCANON_H
#define MATCANON_H

#pragma once

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum McRing {
  MC_RING_Z = 0,
  MC_RING_Q = 1,
  MC_RING_QX = 2,
} McRing;

typedef enum McStatus {
  MC_STATUS_OK = 0,
  MC_STATUS_NULL_ARGUMENT = 1,
  MC_STATUS_INVALID_UTF8 = 2,
  MC_STATUS_PARSE = 3,
  MC_STATUS_RING_MISMATCH = 4,
  MC_STATUS_SHAPE = 5,
  MC_STATUS_NOT_INVERTIBLE = 6,
  MC_STATUS_UNSUPPORTED = 7,
  MC_STATUS_FACTORIZATION_INCOMPLETE = 8,
  MC_STATUS_VERIFICATION = 9,
  MC_STATUS_PANIC = 10,
} McStatus;

// Opaque matrix handle.
typedef struct McMatrix McMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses the text matrix format (`ring`, `rows`, `cols` header lines, then
// one line per row).
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum McStatus mc_matrix_parse(const char *text, struct McMatrix **out);

// # Safety
// `m` must be null or a handle from this library that has not been freed.
void mc_matrix_free(struct McMatrix *m);

// Number of rows, or 0 for a null handle.
//
// # Safety
// `m` must be null or a live handle.
uintptr_t mc_matrix_rows(const struct McMatrix *m);

// Number of columns, or 0 for a null handle.
//
// # Safety
// `m` must be null or a live handle.
uintptr_t mc_matrix_cols(const struct McMatrix *m);

// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_matrix_ring(const struct McMatrix *m, enum McRing *out);

// Writes `m` in the text format accepted by [`mc_matrix_parse`].
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_matrix_to_text(const struct McMatrix *m, char **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum McStatus mc_matrix_multiply(const struct McMatrix *a,
                                 const struct McMatrix *b,
                                 struct McMatrix **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum McStatus mc_matrix_equal(const struct McMatrix *a, const struct McMatrix *b, bool *out);

// Determinant as a string.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_det(const struct McMatrix *m, char **out);

// Row Hermite form `Q*A = H`; `canonical` selects the unique normalized
// form.
//
// # Safety
// `m` must be a live handle; `q_out`, `h_out` and `rank_out` valid pointers.
enum McStatus mc_hermite(const struct McMatrix *m,
                         bool canonical,
                         struct McMatrix **q_out,
                         struct McMatrix **h_out,
                         uintptr_t *rank_out);

// Smith form `P*A*Q = D`.
//
// # Safety
// `m` must be a live handle; the out-parameters valid pointers.
enum McStatus mc_smith(const struct McMatrix *m,
                       struct McMatrix **p_out,
                       struct McMatrix **d_out,
                       struct McMatrix **q_out,
                       uintptr_t *rank_out);

// Rank, determinantal divisors, invariant factors and elementary divisors
// as a JSON object.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_invariants_json(const struct McMatrix *m, char **out);

// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_char_poly(const struct McMatrix *m, char **out);

// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum McStatus mc_min_poly(const struct McMatrix *m, char **out);

// Rational canonical form `F` with `S^-1*A*S = F`.
//
// # Safety
// `m` must be a live handle; `form_out`, `s_out` valid pointers.
enum McStatus mc_rcf(const struct McMatrix *m, struct McMatrix **form_out, struct McMatrix **s_out);

// Jordan canonical form `J` with `S^-1*A*S = J`. Fails with
// `MC_STATUS_UNSUPPORTED` when the characteristic polynomial does not split
// over Q.
//
// # Safety
// `m` must be a live handle; `form_out`, `s_out` valid pointers.
enum McStatus mc_jordan(const struct McMatrix *m,
                        struct McMatrix **form_out,
                        struct McMatrix **s_out);

// Decides similarity. When similar and `s_out` is not null, stores a
// conjugator `S` with `S^-1*A*S = B`; otherwise `*s_out` is set to null.
//
// # Safety
// `a`, `b` must be live handles, `similar_out` a valid pointer and `s_out`
// null or valid.
enum McStatus mc_similar(const struct McMatrix *a,
                         const struct McMatrix *b,
                         bool *similar_out,
                         struct McMatrix **s_out);

// Message for the most recent failed call on this thread, or null. The
// pointer stays valid until the next call into this library on the same
// thread.
const char *mc_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void mc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCANON_H */

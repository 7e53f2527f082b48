/* Copyright 2026 The smwt Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the smwt tensor library.
 *
 * Tensors are opaque, immutable handles. Every function that can fail
 * returns an smwt_status; on failure, smwt_last_error() describes the cause
 * (per thread) and no output handle is written. Handles returned through
 * `out` parameters are owned by the caller and released with
 * smwt_tensor_free().
 *
 * Multi-indices are 1-based. Entry storage is the row-major unfolded matrix:
 * entry (i, j) of a tensor with row dims I and column dims J lives at
 * (phi(i, I) - 1) * prod(J) + (phi(j, J) - 1), where
 * phi(i, I) = i_1 + sum_{m>1} (i_m - 1) * I_1 * ... * I_{m-1}.
 */

#ifndef SMWT_SMWT_H
#define SMWT_SMWT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SMWT_BUILDING_LIBRARY)
#    define SMWT_API __declspec(dllexport)
#  else
#    define SMWT_API __declspec(dllimport)
#  endif
#else
#  define SMWT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct smwt_tensor smwt_tensor;

typedef enum smwt_status {
  SMWT_OK = 0,
  SMWT_ERR_SHAPE,
  SMWT_ERR_INDEX,
  SMWT_ERR_NUMERICAL,
  SMWT_ERR_SINGULAR,
  SMWT_ERR_SINGULAR_CAPACITANCE,
  SMWT_ERR_DOMAIN,
  SMWT_ERR_DEGENERATE,
  SMWT_ERR_PARSE,
  SMWT_ERR_IO,
  SMWT_ERR_INVALID_ARGUMENT,
  SMWT_ERR_INTERNAL
} smwt_status;

SMWT_API const char* smwt_version(void);
SMWT_API const char* smwt_status_name(smwt_status status);
/* Message for the most recent failure on this thread; "" if none. */
SMWT_API const char* smwt_last_error(void);

/* ---- tensors ---------------------------------------------------------- */

/* `entries` holds 2 * prod(row_dims) * prod(col_dims) doubles, interleaved
 * (re, im), in unfolded row-major order. */
SMWT_API smwt_status smwt_tensor_create(const size_t* row_dims, size_t row_order,
                                        const size_t* col_dims, size_t col_order,
                                        const double* entries, smwt_tensor** out);
SMWT_API smwt_status smwt_tensor_zeros(const size_t* row_dims, size_t row_order,
                                       const size_t* col_dims, size_t col_order,
                                       smwt_tensor** out);
SMWT_API smwt_status smwt_tensor_identity(const size_t* dims, size_t order, smwt_tensor** out);
SMWT_API smwt_status smwt_tensor_clone(const smwt_tensor* t, smwt_tensor** out);
SMWT_API void smwt_tensor_free(smwt_tensor* t);

SMWT_API size_t smwt_tensor_row_order(const smwt_tensor* t);
SMWT_API size_t smwt_tensor_col_order(const smwt_tensor* t);
/* Valid for the lifetime of `t`. */
SMWT_API const size_t* smwt_tensor_row_dims(const smwt_tensor* t);
SMWT_API const size_t* smwt_tensor_col_dims(const smwt_tensor* t);
/* Number of complex entries. */
SMWT_API size_t smwt_tensor_size(const smwt_tensor* t);
/* 2 * smwt_tensor_size(t) interleaved doubles, valid for the lifetime of `t`. */
SMWT_API const double* smwt_tensor_data(const smwt_tensor* t);
SMWT_API smwt_status smwt_tensor_at(const smwt_tensor* t, const size_t* row_index,
                                    const size_t* col_index, double* re, double* im);

SMWT_API smwt_status smwt_tensor_load_json(const char* path, smwt_tensor** out);
SMWT_API smwt_status smwt_tensor_save_json(const smwt_tensor* t, const char* path);

/* ---- algebra ---------------------------------------------------------- */

SMWT_API smwt_status smwt_add(const smwt_tensor* a, const smwt_tensor* b, smwt_tensor** out);
SMWT_API smwt_status smwt_subtract(const smwt_tensor* a, const smwt_tensor* b,
                                   smwt_tensor** out);
SMWT_API smwt_status smwt_scale(const smwt_tensor* a, double re, double im, smwt_tensor** out);
SMWT_API smwt_status smwt_einstein_product(const smwt_tensor* a, const smwt_tensor* b, size_t n,
                                           smwt_tensor** out);
SMWT_API smwt_status smwt_conj_transpose(const smwt_tensor* a, smwt_tensor** out);
SMWT_API smwt_status smwt_kronecker(const smwt_tensor* a, const smwt_tensor* b,
                                    smwt_tensor** out);
SMWT_API smwt_status smwt_trace(const smwt_tensor* a, double* re, double* im);
SMWT_API smwt_status smwt_inner(const smwt_tensor* a, const smwt_tensor* b, double* re,
                                double* im);
SMWT_API smwt_status smwt_fro_norm(const smwt_tensor* a, double* out);
SMWT_API smwt_status smwt_is_hermitian(const smwt_tensor* a, double tol, int* out);

typedef struct smwt_rank_info {
  size_t rank;
  int full_row_rank;
  int full_column_rank;
} smwt_rank_info;

/* `tol` scales the default cut sigma_max * max(rows, cols) * 2^-52. */
SMWT_API smwt_status smwt_unfold_rank(const smwt_tensor* a, double tol, smwt_rank_info* out);
SMWT_API smwt_status smwt_is_invertible(const smwt_tensor* a, double tol, int* out);

/* ---- inverses --------------------------------------------------------- */

typedef struct smwt_penrose_report {
  double residuals[4];
  int passed;
  double tol;
} smwt_penrose_report;

SMWT_API smwt_status smwt_inverse(const smwt_tensor* a, smwt_tensor** out);
SMWT_API smwt_status smwt_pinv(const smwt_tensor* a, double tol, smwt_tensor** out);
SMWT_API smwt_status smwt_verify_penrose(const smwt_tensor* a, const smwt_tensor* x, double tol,
                                         smwt_penrose_report* out);

/* ---- low-rank updates: S = A + U * B * V ------------------------------ */

/* residuals[k] belongs to condition label k of "3.1" "3.2" "3.3" "4.1"
 * "4.2" "4.3". */
typedef struct smwt_condition_report {
  double residuals[6];
  int applicable;
  double tol;
} smwt_condition_report;

typedef struct smwt_split_parts {
  smwt_tensor* X1;
  smwt_tensor* Y1;
  smwt_tensor* X2;
  smwt_tensor* Y2;
  smwt_tensor* E1;
  smwt_tensor* E2;
} smwt_split_parts;

SMWT_API const char* smwt_condition_label(size_t k);

SMWT_API smwt_status smwt_apply_update(const smwt_tensor* a, const smwt_tensor* u,
                                       const smwt_tensor* b, const smwt_tensor* v,
                                       smwt_tensor** out);
/* `b_inv` may be NULL, in which case B is inverted internally. */
SMWT_API smwt_status smwt_smw_invertible(const smwt_tensor* a_inv, const smwt_tensor* u,
                                         const smwt_tensor* b, const smwt_tensor* v,
                                         const smwt_tensor* b_inv, smwt_tensor** out);
SMWT_API smwt_status smwt_decompose_update(const smwt_tensor* a, const smwt_tensor* a_pinv,
                                           const smwt_tensor* u, const smwt_tensor* b,
                                           const smwt_tensor* v, double tol,
                                           smwt_split_parts* out);
/* Frees the six handles and nulls them. */
SMWT_API void smwt_split_parts_free(smwt_split_parts* parts);
SMWT_API smwt_status smwt_check_conditions(const smwt_split_parts* parts, const smwt_tensor* b,
                                           const smwt_tensor* b_pinv, double tol,
                                           smwt_condition_report* out);
SMWT_API smwt_status smwt_smw_pinv(const smwt_tensor* a_pinv, const smwt_split_parts* parts,
                                   const smwt_tensor* b_pinv, smwt_tensor** out);
SMWT_API smwt_status smwt_smw_pinv_orthogonal(const smwt_tensor* a_pinv, const smwt_tensor* e1,
                                              const smwt_tensor* e2, const smwt_tensor* b_pinv,
                                              smwt_tensor** out);
SMWT_API smwt_status smwt_smw_pinv_hermitian(const smwt_tensor* a_pinv, const smwt_tensor* x,
                                             const smwt_tensor* y, const smwt_tensor* e,
                                             const smwt_tensor* b_pinv, smwt_tensor** out);
/* When the conditions fail, `s_pinv` is the direct pseudoinverse of S and
 * report->applicable is 0. `parts` may be NULL. */
SMWT_API smwt_status smwt_update_pinv(const smwt_tensor* a, const smwt_tensor* a_pinv,
                                      const smwt_tensor* u, const smwt_tensor* b,
                                      const smwt_tensor* v, double tol, smwt_tensor** s_pinv,
                                      smwt_condition_report* report, smwt_split_parts* parts);

/* ---- multilinear systems and sensitivity ------------------------------ */

typedef struct smwt_solve_info {
  int consistent;
  double consistency_residual;
} smwt_solve_info;

typedef struct smwt_bound_report {
  double alpha;
  double norm_A;
  double norm_A_pinv;
  double eps_A;
  double eps_D;
  double bound;
  int has_measured_error;
  double measured_error;
} smwt_bound_report;

SMWT_API smwt_status smwt_solve(const smwt_tensor* a, const smwt_tensor* d, double tol,
                                smwt_tensor** x, smwt_solve_info* info);
SMWT_API smwt_status smwt_norm_bound(double norm_A, double norm_A_pinv, double eps_A,
                                     double eps_D, double* out);
SMWT_API smwt_status smwt_measure_error(const smwt_tensor* a, const smwt_tensor* d,
                                        const smwt_tensor* u, const smwt_tensor* b,
                                        const smwt_tensor* v, const smwt_tensor* delta_d,
                                        double tol, smwt_bound_report* out);
/* Writes n_eps * n_alpha reports, eps_A outermost; `capacity` must be at
 * least that. */
SMWT_API smwt_status smwt_sweep(const smwt_tensor* a, const smwt_tensor* d, const double* eps_A,
                                size_t n_eps, double eps_D, const double* alpha, size_t n_alpha,
                                smwt_bound_report* out, size_t capacity);
SMWT_API smwt_status smwt_write_sweep_csv(const smwt_bound_report* rows, size_t n,
                                          const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SMWT_SMWT_H */

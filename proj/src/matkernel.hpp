// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_MATKERNEL_HPP
#define SMWT_MATKERNEL_HPP

#include <vector>

#include "matrix.hpp"

namespace smwt {

/// Thin SVD truncated to the numerical rank r: m = u · diag(s) · vᴴ with
/// u (m×r) and v (n×r) having orthonormal columns and s strictly descending
/// or equal, every entry above the truncation threshold.
struct Svd {
  Matrix u;
  std::vector<double> s;
  Matrix v;

  std::size_t rank() const noexcept { return s.size(); }
};

/// Relative threshold below which singular values count as zero:
/// tol · σ_max · max(rows, cols) · 2⁻⁵². `tol` scales the default (1).
double rank_threshold(double sigma_max, std::size_t rows, std::size_t cols, double tol = 1.0);

/// All min(m, n) singular values, descending, untruncated.
std::vector<double> singular_values(const Matrix& m);

/// One-sided (Hestenes) Jacobi SVD. Throws NumericalError on non-finite input
/// or if 60 sweeps do not converge.
Svd svd(const Matrix& m, double tol = 1.0);

/// Moore–Penrose inverse v · diag(1/s) · uᴴ. The zero matrix maps to the
/// zero matrix of transposed shape.
Matrix pinv_matrix(const Matrix& m, double tol = 1.0);

/// Inverse of a square matrix of full numerical rank. Throws ShapeError for
/// non-square input and SingularMatrixError (with the rank) otherwise.
Matrix inv_matrix(const Matrix& m);

}  // namespace smwt

#endif  // SMWT_MATKERNEL_HPP

// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_GENERALIZED_INVERSE_HPP
#define SMWT_GENERALIZED_INVERSE_HPP

#include <array>

#include "tensor.hpp"

namespace smwt {

/// Relative residuals of the four Penrose equations
///   (1) A⋆X⋆A = A   (2) X⋆A⋆X = X   (3) (A⋆X)ᴴ = A⋆X   (4) (X⋆A)ᴴ = X⋆A
/// each as ‖lhs − rhs‖ / max(1, ‖rhs‖).
struct PenroseReport {
  std::array<double, 4> residuals{};
  bool passed = false;
  double tol = 0.0;
};

/// A⁻¹ for a square tensor with full unfolding rank. Throws ShapeError for
/// non-square input and SingularTensorError otherwise.
EinsteinTensor inverse(const EinsteinTensor& a);

/// A†, shape (A.col_dims | A.row_dims). `tol` scales the rank cut.
EinsteinTensor pinv(const EinsteinTensor& a, double tol = 1.0);

/// Throws ShapeError unless x has the transposed shape of a.
PenroseReport verify_penrose(const EinsteinTensor& a, const EinsteinTensor& x, double tol);

}  // namespace smwt

#endif  // SMWT_GENERALIZED_INVERSE_HPP

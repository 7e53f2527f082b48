// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "generalized_inverse.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"
#include "matkernel.hpp"

namespace smwt {

namespace {

double relative_residual(const Matrix& lhs, const Matrix& rhs) {
  return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(rhs));
}

}  // namespace

EinsteinTensor inverse(const EinsteinTensor& a) {
  if (!a.shape().is_square()) {
    throw ShapeError("inverse needs a square tensor, got " + a.shape().str());
  }
  try {
    return EinsteinTensor(a.shape().transposed(), inv_matrix(a.unfolded()));
  } catch (const SingularMatrixError& e) {
    const std::vector<double> s = singular_values(a.unfolded());
    throw SingularTensorError("tensor " + a.shape().str() + " is singular: unfolding rank " +
                                  std::to_string(e.rank()) + " of " +
                                  std::to_string(a.shape().row_size()),
                              e.rank(), s.empty() ? 0.0 : s.back());
  }
}

EinsteinTensor pinv(const EinsteinTensor& a, double tol) {
  return EinsteinTensor(a.shape().transposed(), pinv_matrix(a.unfolded(), tol));
}

PenroseReport verify_penrose(const EinsteinTensor& a, const EinsteinTensor& x, double tol) {
  if (x.shape() != a.shape().transposed()) {
    throw ShapeError("Penrose candidate has shape " + x.shape().str() + ", expected " +
                     a.shape().transposed().str());
  }
  const Matrix& ma = a.unfolded();
  const Matrix& mx = x.unfolded();
  const Matrix ax = ma * mx;
  const Matrix xa = mx * ma;

  PenroseReport r;
  r.tol = tol;
  r.residuals[0] = relative_residual(ax * ma, ma);
  r.residuals[1] = relative_residual(xa * mx, mx);
  r.residuals[2] = relative_residual(adjoint(ax), ax);
  r.residuals[3] = relative_residual(adjoint(xa), xa);
  r.passed = std::all_of(r.residuals.begin(), r.residuals.end(),
                         [tol](double v) { return v <= tol; });
  return r;
}

}  // namespace smwt

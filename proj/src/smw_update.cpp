// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "smw_update.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"
#include "generalized_inverse.hpp"
#include "matkernel.hpp"

namespace smwt {

namespace {

double relative_residual(const Matrix& lhs, const Matrix& rhs) {
  return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(rhs));
}

void require_shape(const EinsteinTensor& t, const PairedShape& want, const char* what) {
  if (t.shape() != want) {
    throw ShapeError(std::string(what) + " has shape " + t.shape().str() + ", expected " +
                     want.str());
  }
}

// Y ⋆ (Yᴴ⋆Y)†, computed on unfoldings.
Matrix e_tensor(const Matrix& y) {
  const Matrix yh = adjoint(y);
  return y * pinv_matrix(yh * y);
}

// Returns {X, Y} with X = P·F, Y = F − X and negligible parts snapped to zero.
std::pair<Matrix, Matrix> split(const Matrix& projector, const Matrix& f, double tol) {
  Matrix x = projector * f;
  Matrix y = f - x;
  const double scale = tol * frobenius_norm(f);
  if (frobenius_norm(y) <= scale) return {f, Matrix(f.rows(), f.cols())};
  if (frobenius_norm(x) <= scale) return {Matrix(f.rows(), f.cols()), f};
  return {std::move(x), std::move(y)};
}

}  // namespace

void LowRankUpdate::validate(const PairedShape& base) const {
  if (!B.shape().is_square()) {
    throw ShapeError("update core B must be square, got " + B.shape().str());
  }
  const Dims& k = B.shape().row_dims();
  if (U.shape() != PairedShape(base.row_dims(), k)) {
    throw ShapeError("update factor U has shape " + U.shape().str() + ", expected " +
                     PairedShape(base.row_dims(), k).str());
  }
  if (V.shape() != PairedShape(k, base.col_dims())) {
    throw ShapeError("update factor V has shape " + V.shape().str() + ", expected " +
                     PairedShape(k, base.col_dims()).str());
  }
}

EinsteinTensor apply_update(const EinsteinTensor& a, const LowRankUpdate& upd) {
  upd.validate(a.shape());
  return EinsteinTensor(a.shape(),
                        a.unfolded() + upd.U.unfolded() * upd.B.unfolded() * upd.V.unfolded());
}

EinsteinTensor smw_invertible(const EinsteinTensor& a_inv, const LowRankUpdate& upd,
                              const EinsteinTensor& b_inv) {
  if (!a_inv.shape().is_square()) {
    throw ShapeError("A⁻¹ must be square, got " + a_inv.shape().str());
  }
  upd.validate(a_inv.shape());
  require_shape(b_inv, upd.B.shape(), "B⁻¹");

  const Matrix& ai = a_inv.unfolded();
  const Matrix ai_u = ai * upd.U.unfolded();
  const Matrix v_ai = upd.V.unfolded() * ai;
  const Matrix c = b_inv.unfolded() + upd.V.unfolded() * ai_u;
  Matrix c_inv;
  try {
    c_inv = inv_matrix(c);
  } catch (const SingularMatrixError& e) {
    throw SingularCapacitanceError("capacitance tensor is singular: rank " +
                                       std::to_string(e.rank()) + " of " +
                                       std::to_string(c.rows()),
                                   e.rank());
  }
  return EinsteinTensor(a_inv.shape(), ai - ai_u * c_inv * v_ai);
}

EinsteinTensor smw_invertible(const EinsteinTensor& a_inv, const LowRankUpdate& upd) {
  return smw_invertible(a_inv, upd, inverse(upd.B));
}

SplitParts decompose_update(const EinsteinTensor& a, const EinsteinTensor& a_pinv,
                            const LowRankUpdate& upd, double tol) {
  upd.validate(a.shape());
  require_shape(a_pinv, a.shape().transposed(), "A†");

  const Matrix& ma = a.unfolded();
  const Matrix& mp = a_pinv.unfolded();
  auto [x1, y1] = split(ma * mp, upd.U.unfolded(), tol);
  auto [x2, y2] = split(mp * ma, adjoint(upd.V.unfolded()), tol);
  Matrix e1 = e_tensor(y1);
  Matrix e2 = e_tensor(y2);

  const PairedShape& us = upd.U.shape();
  const PairedShape vhs = upd.V.shape().transposed();
  return SplitParts{EinsteinTensor(us, std::move(x1)), EinsteinTensor(us, std::move(y1)),
                    EinsteinTensor(vhs, std::move(x2)), EinsteinTensor(vhs, std::move(y2)),
                    EinsteinTensor(us, std::move(e1)), EinsteinTensor(vhs, std::move(e2))};
}

ConditionReport check_conditions(const SplitParts& p, const EinsteinTensor& b,
                                 const EinsteinTensor& b_pinv, double tol) {
  require_shape(b_pinv, b.shape().transposed(), "B†");
  require_shape(p.Y1, p.X1.shape(), "Y1");
  require_shape(p.E1, p.X1.shape(), "E1");
  require_shape(p.Y2, p.X2.shape(), "Y2");
  require_shape(p.E2, p.X2.shape(), "E2");
  if (p.X1.shape().col_dims() != b.shape().row_dims() ||
      p.X2.shape().col_dims() != b.shape().col_dims()) {
    throw ShapeError("split parts do not conform with B of shape " + b.shape().str());
  }

  const Matrix& x1 = p.X1.unfolded();
  const Matrix& y1 = p.Y1.unfolded();
  const Matrix& e2 = p.E2.unfolded();
  const Matrix& mb = b.unfolded();
  const Matrix& bp = b_pinv.unfolded();
  const Matrix x2h = adjoint(p.X2.unfolded());
  const Matrix y2h = adjoint(p.Y2.unfolded());
  const Matrix e1h = adjoint(p.E1.unfolded());

  const Matrix e1h_y1 = e1h * y1;
  const Matrix b_y2h_e2 = mb * y2h * e2;

  ConditionReport r;
  r.tol = tol;
  r.residuals[0] = relative_residual(e2 * bp * e1h_y1 * mb, e2);
  r.residuals[1] = relative_residual(x1 * e1h_y1 * mb, x1 * mb);
  r.residuals[2] = relative_residual(y1 * e1h_y1, y1);
  r.residuals[3] = relative_residual(b_y2h_e2 * bp * e1h, e1h);
  r.residuals[4] = relative_residual(b_y2h_e2 * x2h, mb * x2h);
  r.residuals[5] = relative_residual(e2 * y2h * e2, e2);
  r.applicable = std::all_of(r.residuals.begin(), r.residuals.end(),
                             [tol](double v) { return v <= tol; });
  return r;
}

EinsteinTensor smw_pinv(const EinsteinTensor& a_pinv, const SplitParts& p,
                        const EinsteinTensor& b_pinv) {
  const Matrix& ap = a_pinv.unfolded();
  const Matrix& x1 = p.X1.unfolded();
  const Matrix& e2 = p.E2.unfolded();
  const Matrix x2h = adjoint(p.X2.unfolded());
  const Matrix e1h = adjoint(p.E1.unfolded());

  const Matrix x2h_ap = x2h * ap;
  const Matrix core = b_pinv.unfolded() + x2h_ap * x1;
  Matrix out = ap - e2 * x2h_ap - ap * x1 * e1h + e2 * core * e1h;
  return EinsteinTensor(a_pinv.shape(), std::move(out));
}

EinsteinTensor smw_pinv_orthogonal(const EinsteinTensor& a_pinv, const EinsteinTensor& e1,
                                   const EinsteinTensor& e2, const EinsteinTensor& b_pinv) {
  const Matrix corr = e2.unfolded() * b_pinv.unfolded() * adjoint(e1.unfolded());
  return EinsteinTensor(a_pinv.shape(), a_pinv.unfolded() + corr);
}

EinsteinTensor smw_pinv_hermitian(const EinsteinTensor& a_pinv, const EinsteinTensor& x,
                                  const EinsteinTensor& y, const EinsteinTensor& e,
                                  const EinsteinTensor& b_pinv) {
  require_shape(y, x.shape(), "Y");
  require_shape(e, x.shape(), "E");
  const Matrix& ap = a_pinv.unfolded();
  const Matrix& mx = x.unfolded();
  const Matrix& me = e.unfolded();
  const Matrix xh = adjoint(mx);
  const Matrix eh = adjoint(me);

  const Matrix xh_ap = xh * ap;
  const Matrix core = b_pinv.unfolded() + xh_ap * mx;
  Matrix out = ap - me * xh_ap - ap * mx * eh + me * core * eh;
  return EinsteinTensor(a_pinv.shape(), std::move(out));
}

PinvUpdate update_pinv(const EinsteinTensor& a, const EinsteinTensor& a_pinv,
                       const LowRankUpdate& upd, double tol) {
  SplitParts parts = decompose_update(a, a_pinv, upd, tol);
  const EinsteinTensor b_pinv = pinv(upd.B);
  ConditionReport report = check_conditions(parts, upd.B, b_pinv, tol);
  if (report.applicable) {
    EinsteinTensor s_pinv = smw_pinv(a_pinv, parts, b_pinv);
    return PinvUpdate{std::move(s_pinv), report, std::move(parts)};
  }
  return PinvUpdate{pinv(apply_update(a, upd)), report, std::move(parts)};
}

}  // namespace smwt

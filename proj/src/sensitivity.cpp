// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"
#include "generalized_inverse.hpp"

namespace smwt {

namespace {

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
  }
}

void require_rhs(const EinsteinTensor& a, const EinsteinTensor& d) {
  if (a.shape().row_dims() != d.shape().row_dims()) {
    throw ShapeError("right-hand side " + d.shape().str() + " does not match " +
                     a.shape().str());
  }
}

}  // namespace

SolveResult solve(const EinsteinTensor& a, const EinsteinTensor& d, double tol) {
  require_rhs(a, d);
  const EinsteinTensor a_pinv = pinv(a);
  EinsteinTensor x(PairedShape(a.shape().col_dims(), d.shape().col_dims()),
                   a_pinv.unfolded() * d.unfolded());
  const double res = frobenius_norm(a.unfolded() * x.unfolded() - d.unfolded()) /
                     std::max(1.0, fro_norm(d));
  return SolveResult{std::move(x), res <= tol, res};
}

double norm_bound(double norm_A, double norm_A_pinv, const PerturbationSpec& p) {
  require_nonnegative(norm_A, "norm_A");
  require_nonnegative(norm_A_pinv, "norm_A_pinv");
  require_nonnegative(p.eps_A, "eps_A");
  require_nonnegative(p.eps_D, "eps_D");
  const double a = norm_A;
  const double ap = norm_A_pinv;
  const double e = p.eps_A;
  const double inner = 2.0 * e * e * ap + e * e * e * a + e * e * e * e * a * a * ap;
  return (1.0 + p.eps_D) * a * a * a * inner + p.eps_D * a * ap;
}

BoundReport measure_error(const EinsteinTensor& a, const EinsteinTensor& d,
                          const LowRankUpdate& upd, const EinsteinTensor& delta_d, double tol) {
  require_rhs(a, d);
  if (delta_d.shape() != d.shape()) {
    throw ShapeError("δD has shape " + delta_d.shape().str() + ", expected " + d.shape().str());
  }
  const EinsteinTensor a_pinv = pinv(a);
  const Matrix x = a_pinv.unfolded() * d.unfolded();
  const double norm_x = frobenius_norm(x);
  if (norm_x == 0.0) {
    throw DegenerateSolutionError("unperturbed solution is zero; normalized error undefined");
  }

  const PinvUpdate up = update_pinv(a, a_pinv, upd, tol);
  const Matrix y = up.S_pinv.unfolded() * (d.unfolded() + delta_d.unfolded());

  BoundReport r;
  r.norm_A = fro_norm(a);
  r.norm_A_pinv = fro_norm(a_pinv);
  const double largest = std::max({fro_norm(up.parts.X1), fro_norm(up.parts.X2),
                                   fro_norm(up.parts.E1), fro_norm(up.parts.E2)});
  r.eps_A = r.norm_A > 0.0 ? largest / r.norm_A : 0.0;
  const double norm_dd = fro_norm(delta_d);
  const double norm_d = fro_norm(d);
  r.eps_D = norm_dd == 0.0 ? 0.0 : norm_dd / norm_d;
  r.bound = norm_bound(r.norm_A, r.norm_A_pinv, {r.eps_A, r.eps_D});
  r.measured_error = frobenius_norm(y - x) / norm_x;
  return r;
}

std::vector<BoundReport> sweep(const EinsteinTensor& a, const EinsteinTensor& d,
                               const std::vector<double>& eps_A_list, double eps_D,
                               const std::vector<double>& alpha_grid) {
  require_rhs(a, d);
  if (eps_A_list.empty()) throw DomainError("eps_A list is empty");
  if (alpha_grid.empty()) throw DomainError("alpha grid is empty");
  require_nonnegative(eps_D, "eps_D");
  for (double e : eps_A_list) require_nonnegative(e, "eps_A");
  for (double alpha : alpha_grid) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
      throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
    }
  }

  const double norm_a = fro_norm(a);
  const double norm_a_pinv = fro_norm(pinv(a));
  std::vector<BoundReport> rows;
  rows.reserve(eps_A_list.size() * alpha_grid.size());
  for (double e : eps_A_list) {
    for (double alpha : alpha_grid) {
      BoundReport r;
      r.alpha = alpha;
      r.norm_A = alpha * norm_a;
      r.norm_A_pinv = norm_a_pinv / alpha;
      r.eps_A = e;
      r.eps_D = eps_D;
      r.bound = norm_bound(r.norm_A, r.norm_A_pinv, {e, eps_D});
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace smwt

// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_SENSITIVITY_HPP
#define SMWT_SENSITIVITY_HPP

#include <optional>
#include <vector>

#include "smw_update.hpp"
#include "tensor.hpp"

namespace smwt {

struct SolveResult {
  EinsteinTensor X;
  bool consistent = false;
  /// ‖A⋆A†⋆D − D‖ / max(1, ‖D‖)
  double consistency_residual = 0.0;
};

struct PerturbationSpec {
  double eps_A = 0.0;
  double eps_D = 0.0;
};

struct BoundReport {
  double alpha = 1.0;
  double norm_A = 0.0;
  double norm_A_pinv = 0.0;
  double eps_A = 0.0;
  double eps_D = 0.0;
  double bound = 0.0;
  std::optional<double> measured_error;
};

inline constexpr double kDefaultSolveTol = 1e-10;

/// X = A†⋆D. A and D must share row modes; X has shape (A.col | D.col).
SolveResult solve(const EinsteinTensor& a, const EinsteinTensor& d,
                  double tol = kDefaultSolveTol);

/// (1+ε_D)‖A‖³(2ε_A²‖A†‖ + ε_A³‖A‖ + ε_A⁴‖A‖²‖A†‖) + ε_D‖A‖‖A†‖.
/// Throws DomainError for negative or non-finite input.
double norm_bound(double norm_A, double norm_A_pinv, const PerturbationSpec& p);

/// Solves A⋆X = D and (A + U⋆B⋆V)⋆Y = D + δD, the perturbed pseudoinverse
/// coming from update_pinv. ε_A = max(‖X1‖, ‖X2‖, ‖E1‖, ‖E2‖)/‖A‖ and
/// ε_D = ‖δD‖/‖D‖ are inferred from the actual tensors. Throws
/// DegenerateSolutionError when X vanishes.
BoundReport measure_error(const EinsteinTensor& a, const EinsteinTensor& d,
                          const LowRankUpdate& upd, const EinsteinTensor& delta_d,
                          double tol = kDefaultApplicabilityTol);

/// One report per (ε_A, α), ε_A outermost, in input order. Uses
/// ‖αA‖ = α‖A‖ and ‖(αA)†‖ = ‖A†‖/α.
std::vector<BoundReport> sweep(const EinsteinTensor& a, const EinsteinTensor& d,
                               const std::vector<double>& eps_A_list, double eps_D,
                               const std::vector<double>& alpha_grid);

}  // namespace smwt

#endif  // SMWT_SENSITIVITY_HPP

// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_SMW_UPDATE_HPP
#define SMWT_SMW_UPDATE_HPP

#include <array>
#include <string_view>

#include "tensor.hpp"

namespace smwt {

/// Correction U ⋆_K B ⋆_K V with U (I|K), B (K|K), V (K|J).
struct LowRankUpdate {
  EinsteinTensor U;
  EinsteinTensor B;
  EinsteinTensor V;

  std::size_t contraction_order() const noexcept { return B.shape().row_order(); }

  /// Throws ShapeError unless the factors chain and U⋆B⋆V has `base`'s shape.
  void validate(const PairedShape& base) const;
};

/// Column-space split of an update relative to A:
///   U  = X1 + Y1,  X1 = (A⋆A†)⋆U
///   Vᴴ = X2 + Y2,  X2 = (A†⋆A)⋆Vᴴ
///   E_i = Y_i ⋆ (Y_iᴴ⋆Y_i)†
struct SplitParts {
  EinsteinTensor X1, Y1, X2, Y2, E1, E2;
};

inline constexpr std::array<std::string_view, 6> kConditionLabels = {"3.1", "3.2", "3.3",
                                                                     "4.1", "4.2", "4.3"};

/// Residuals of the six applicability equalities, ordered as kConditionLabels:
///   3.1  E2 B† E1ᴴ Y1 B = E2        4.1  B Y2ᴴ E2 B† E1ᴴ = E1ᴴ
///   3.2  X1 E1ᴴ Y1 B   = X1 B       4.2  B Y2ᴴ E2 X2ᴴ    = B X2ᴴ
///   3.3  Y1 E1ᴴ Y1     = Y1         4.3  E2 Y2ᴴ E2       = E2
struct ConditionReport {
  std::array<double, 6> residuals{};
  bool applicable = false;
  double tol = 0.0;
};

inline constexpr double kDefaultApplicabilityTol = 1e-8;

/// S = A + U⋆B⋆V.
EinsteinTensor apply_update(const EinsteinTensor& a, const LowRankUpdate& upd);

/// A⁻¹ − A⁻¹⋆U⋆C⁻¹⋆V⋆A⁻¹ with capacitance C = B⁻¹ + V⋆A⁻¹⋆U. Throws
/// SingularCapacitanceError when C is singular.
EinsteinTensor smw_invertible(const EinsteinTensor& a_inv, const LowRankUpdate& upd,
                              const EinsteinTensor& b_inv);
/// As above, inverting B itself; a singular B raises SingularTensorError.
EinsteinTensor smw_invertible(const EinsteinTensor& a_inv, const LowRankUpdate& upd);

/// Parts whose norm is at most tol times the norm of the factor they split
/// are set to exact zero, the complementary part taking the whole factor.
/// Rounding residue in an otherwise empty part would make (YᴴY)† explode.
SplitParts decompose_update(const EinsteinTensor& a, const EinsteinTensor& a_pinv,
                            const LowRankUpdate& upd, double tol = kDefaultApplicabilityTol);

ConditionReport check_conditions(const SplitParts& parts, const EinsteinTensor& b,
                                 const EinsteinTensor& b_pinv,
                                 double tol = kDefaultApplicabilityTol);

/// A† − E2⋆X2ᴴ⋆A† − A†⋆X1⋆E1ᴴ + E2⋆(B† + X2ᴴ⋆A†⋆X1)⋆E1ᴴ.
/// Does not check applicability.
EinsteinTensor smw_pinv(const EinsteinTensor& a_pinv, const SplitParts& parts,
                        const EinsteinTensor& b_pinv);

/// A† + E2⋆B†⋆E1ᴴ, valid when X1 and X2 vanish.
EinsteinTensor smw_pinv_orthogonal(const EinsteinTensor& a_pinv, const EinsteinTensor& e1,
                                   const EinsteinTensor& e2, const EinsteinTensor& b_pinv);

/// Hermitian A with U = Vᴴ = X + Y and E = Y⋆(YᴴY)†.
EinsteinTensor smw_pinv_hermitian(const EinsteinTensor& a_pinv, const EinsteinTensor& x,
                                  const EinsteinTensor& y, const EinsteinTensor& e,
                                  const EinsteinTensor& b_pinv);

struct PinvUpdate {
  EinsteinTensor S_pinv;
  ConditionReport report;
  SplitParts parts;
};

/// decompose → check → smw_pinv; when the conditions fail, S_pinv is the
/// direct pseudoinverse of S and report.applicable is false.
PinvUpdate update_pinv(const EinsteinTensor& a, const EinsteinTensor& a_pinv,
                       const LowRankUpdate& upd, double tol = kDefaultApplicabilityTol);

}  // namespace smwt

#endif  // SMWT_SMW_UPDATE_HPP

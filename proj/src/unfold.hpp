// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_UNFOLD_HPP
#define SMWT_UNFOLD_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "tensor.hpp"

namespace smwt {

using UnfoldedMatrix = Matrix;

/// 1-based multi-index paired with its extents.
struct MultiIndex {
  std::vector<std::size_t> idx;
  Dims dims;
};

/// φ(i, 𝕀) = i₁ + Σ_{m≥2} (i_m − 1) · ∏_{u<m} I_u, 1-based in and out.
/// Throws IndexError for a component outside 1..dims[k] or a length mismatch.
std::size_t phi_index(std::span<const std::size_t> idx, std::span<const std::size_t> dims);
inline std::size_t phi_index(const MultiIndex& m) { return phi_index(m.idx, m.dims); }

/// Inverse of phi_index: 1 ≤ flat ≤ ∏dims.
MultiIndex phi_inverse(std::size_t flat, const Dims& dims);

/// φ(A). With the storage layout this is a view, never a copy.
inline const UnfoldedMatrix& unfold(const EinsteinTensor& a) noexcept { return a.unfolded(); }

/// Inverse of unfold; ShapeError unless m is row_size × col_size.
EinsteinTensor fold(UnfoldedMatrix m, const PairedShape& shape);

struct RankInfo {
  std::size_t rank = 0;
  bool full_row_rank = false;     // rank == I₁⋯I_M
  bool full_column_rank = false;  // rank == J₁⋯J_N
};

/// Numerical rank of φ(A); `tol` scales the default σ_max·max(m,n)·2⁻⁵² cut.
RankInfo unfold_rank(const EinsteinTensor& a, double tol = 1.0);

/// Square tensor with full unfolding rank. ShapeError when not square.
bool is_invertible(const EinsteinTensor& a, double tol = 1.0);

}  // namespace smwt

#endif  // SMWT_UNFOLD_HPP

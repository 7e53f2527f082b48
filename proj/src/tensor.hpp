// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_TENSOR_HPP
#define SMWT_TENSOR_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace smwt {

using Dims = std::vector<std::size_t>;

/// Row-mode / column-mode signature (I₁…I_M | J₁…J_N) of an Einstein-product
/// operand. Either side may be empty, but not both; every extent is ≥ 1 and
/// the total entry count fits in addressable memory.
class PairedShape {
 public:
  PairedShape(Dims row_dims, Dims col_dims);

  const Dims& row_dims() const noexcept { return row_dims_; }
  const Dims& col_dims() const noexcept { return col_dims_; }
  std::size_t row_order() const noexcept { return row_dims_.size(); }
  std::size_t col_order() const noexcept { return col_dims_.size(); }
  std::size_t row_size() const noexcept { return row_size_; }
  std::size_t col_size() const noexcept { return col_size_; }
  std::size_t size() const noexcept { return row_size_ * col_size_; }

  bool is_square() const noexcept { return row_dims_ == col_dims_; }
  PairedShape transposed() const { return {col_dims_, row_dims_}; }

  /// e.g. "(2,2|1,1)"
  std::string str() const;

  friend bool operator==(const PairedShape& a, const PairedShape& b) {
    return a.row_dims_ == b.row_dims_ && a.col_dims_ == b.col_dims_;
  }

 private:
  Dims row_dims_;
  Dims col_dims_;
  std::size_t row_size_;
  std::size_t col_size_;
};

/// Dense complex tensor over a PairedShape. Entry a_{i₁…i_M, j₁…j_N} lives
/// at flat offset (φ(i)−1)·col_size + (φ(j)−1), so the storage *is* the
/// row-major unfolded matrix. Immutable once built.
class EinsteinTensor {
 public:
  /// Throws ShapeError on a length mismatch, NumericalError on NaN/Inf.
  EinsteinTensor(PairedShape shape, std::vector<Scalar> entries);
  /// Throws ShapeError unless m is row_size × col_size.
  EinsteinTensor(PairedShape shape, Matrix unfolded);

  const PairedShape& shape() const noexcept { return shape_; }
  std::span<const Scalar> entries() const noexcept { return unfolded_.entries(); }
  /// Zero-cost view of the unfolding φ(A).
  const Matrix& unfolded() const noexcept { return unfolded_; }

  /// Entry at 1-based row and column multi-indices.
  Scalar at(std::span<const std::size_t> row_index, std::span<const std::size_t> col_index) const;

  friend bool operator==(const EinsteinTensor&, const EinsteinTensor&) = default;

 private:
  PairedShape shape_;
  Matrix unfolded_;
};

EinsteinTensor zeros(const PairedShape& shape);
/// Identity over (dims | dims); unfolds to the identity matrix.
EinsteinTensor identity(const Dims& dims);

EinsteinTensor add(const EinsteinTensor& a, const EinsteinTensor& b);
EinsteinTensor subtract(const EinsteinTensor& a, const EinsteinTensor& b);
EinsteinTensor scale(const EinsteinTensor& a, Scalar c);

/// A ⋆_N B: contracts all N column modes of A with the row modes of B.
/// Throws ShapeError unless A.col_dims == B.row_dims and N == their count.
EinsteinTensor einstein_product(const EinsteinTensor& a, const EinsteinTensor& b, std::size_t n);

EinsteinTensor conj_transpose(const EinsteinTensor& a);

/// (A ⊗ B) with shape (A.rows ++ B.rows | A.cols ++ B.cols) and entries
/// a_{i,j}·b_{k,l}.
EinsteinTensor kronecker(const EinsteinTensor& a, const EinsteinTensor& b);

/// Keeps the full mode sequence (rows ++ cols) and every entry's full
/// multi-index, but moves the row/column split so that the first
/// `row_modes` modes become row modes.
EinsteinTensor regroup(const EinsteinTensor& a, std::size_t row_modes);

Scalar trace(const EinsteinTensor& a);
/// ⟨A, B⟩ = Tr(Aᴴ ⋆ B).
Scalar inner(const EinsteinTensor& a, const EinsteinTensor& b);
double fro_norm(const EinsteinTensor& a);
/// ‖A − Aᴴ‖ ≤ tol · max(1, ‖A‖). Square tensors only.
bool is_hermitian(const EinsteinTensor& a, double tol = 1e-12);

inline EinsteinTensor operator+(const EinsteinTensor& a, const EinsteinTensor& b) {
  return add(a, b);
}
inline EinsteinTensor operator-(const EinsteinTensor& a, const EinsteinTensor& b) {
  return subtract(a, b);
}
/// Einstein product over every column mode of `a`.
inline EinsteinTensor operator*(const EinsteinTensor& a, const EinsteinTensor& b) {
  return einstein_product(a, b, a.shape().col_order());
}

}  // namespace smwt

#endif  // SMWT_TENSOR_HPP

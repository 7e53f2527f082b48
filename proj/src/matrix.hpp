// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_MATRIX_HPP
#define SMWT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace smwt {

using Scalar = std::complex<double>;

/// Dense row-major complex matrix. This is also the unfolded form of every
/// tensor: an EinsteinTensor owns one of these and reinterprets it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; throws ShapeError on a length
  /// mismatch and NumericalError on non-finite entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return data_; }
  std::span<Scalar> entries() noexcept { return data_; }

  /// Moves the storage out, leaving an empty 0×0 matrix.
  std::vector<Scalar> release() &&;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(Scalar c, const Matrix& a);
/// Matrix product; ShapeError unless a.cols() == b.rows().
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix adjoint(const Matrix& a);
double frobenius_norm(const Matrix& a);
bool all_finite(std::span<const Scalar> values) noexcept;

}  // namespace smwt

#endif  // SMWT_MATRIX_HPP

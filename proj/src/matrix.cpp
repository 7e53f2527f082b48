// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "error.hpp"

namespace smwt {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("matrix of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " given " + std::to_string(data_.size()) + " entries");
  }
  if (!all_finite(data_)) throw NumericalError("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Scalar> Matrix::release() && {
  rows_ = cols_ = 0;
  return std::move(data_);
}

namespace {

void require_same_dims(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dims(a, b, "matrix add");
  Matrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dims(a, b, "matrix subtract");
  Matrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

Matrix operator*(Scalar c, const Matrix& a) {
  Matrix out = a;
  for (auto& v : out.entries()) v *= c;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()));
  }
  Matrix out(a.rows(), b.cols());
  // i-k-j order keeps the inner loop contiguous in both b and out.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

double frobenius_norm(const Matrix& a) {
  // Scaled sum of squares avoids overflow for large entries.
  double scale = 0.0;
  double ssq = 1.0;
  for (const Scalar& v : a.entries()) {
    for (double part : {v.real(), v.imag()}) {
      if (part == 0.0) continue;
      const double x = std::abs(part);
      if (scale < x) {
        ssq = 1.0 + ssq * (scale / x) * (scale / x);
        scale = x;
      } else {
        ssq += (x / scale) * (x / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

bool all_finite(std::span<const Scalar> values) noexcept {
  for (const Scalar& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace smwt

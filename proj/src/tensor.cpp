// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "tensor.hpp"

#include <cstdint>
#include <limits>
#include <utility>

#include "error.hpp"
#include "unfold.hpp"

namespace smwt {

namespace {

constexpr std::size_t kMaxEntries =
    static_cast<std::size_t>(std::numeric_limits<std::ptrdiff_t>::max()) / sizeof(Scalar);

std::size_t checked_product(const Dims& dims, const char* side) {
  std::size_t p = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw ShapeError(std::string(side) + " extent must be >= 1");
    if (p > kMaxEntries / d) throw ShapeError(std::string(side) + " size overflows");
    p *= d;
  }
  return p;
}

std::string join(const Dims& dims) {
  std::string s;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(dims[k]);
  }
  return s;
}

void require_same_shape(const EinsteinTensor& a, const EinsteinTensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(op) + ": shape " + a.shape().str() + " vs " + b.shape().str());
  }
}

void require_square(const EinsteinTensor& a, const char* op) {
  if (!a.shape().is_square()) {
    throw ShapeError(std::string(op) + " needs a square tensor, got " + a.shape().str());
  }
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

PairedShape::PairedShape(Dims row_dims, Dims col_dims)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {
  if (row_dims_.empty() && col_dims_.empty()) {
    throw ShapeError("shape needs at least one row or column mode");
  }
  row_size_ = checked_product(row_dims_, "row");
  col_size_ = checked_product(col_dims_, "column");
  if (row_size_ > kMaxEntries / col_size_) throw ShapeError("tensor size overflows");
}

std::string PairedShape::str() const {
  return "(" + join(row_dims_) + "|" + join(col_dims_) + ")";
}

EinsteinTensor::EinsteinTensor(PairedShape shape, std::vector<Scalar> entries)
    : shape_(std::move(shape)), unfolded_() {
  if (entries.size() != shape_.size()) {
    throw ShapeError("tensor of shape " + shape_.str() + " needs " +
                     std::to_string(shape_.size()) + " entries, got " +
                     std::to_string(entries.size()));
  }
  unfolded_ = Matrix(shape_.row_size(), shape_.col_size(), std::move(entries));
}

EinsteinTensor::EinsteinTensor(PairedShape shape, Matrix unfolded)
    : shape_(std::move(shape)), unfolded_(std::move(unfolded)) {
  if (unfolded_.rows() != shape_.row_size() || unfolded_.cols() != shape_.col_size()) {
    throw ShapeError("matrix " + std::to_string(unfolded_.rows()) + "x" +
                     std::to_string(unfolded_.cols()) + " does not unfold shape " + shape_.str());
  }
  if (!all_finite(unfolded_.entries())) throw NumericalError("tensor entries must be finite");
}

Scalar EinsteinTensor::at(std::span<const std::size_t> row_index,
                          std::span<const std::size_t> col_index) const {
  const std::size_t r = shape_.row_order() ? phi_index(row_index, shape_.row_dims()) : 1;
  const std::size_t c = shape_.col_order() ? phi_index(col_index, shape_.col_dims()) : 1;
  return unfolded_(r - 1, c - 1);
}

EinsteinTensor zeros(const PairedShape& shape) {
  return EinsteinTensor(shape, Matrix(shape.row_size(), shape.col_size()));
}

EinsteinTensor identity(const Dims& dims) {
  if (dims.empty()) throw ShapeError("identity needs at least one mode");
  PairedShape shape(dims, dims);
  return EinsteinTensor(shape, Matrix::identity(shape.row_size()));
}

EinsteinTensor add(const EinsteinTensor& a, const EinsteinTensor& b) {
  require_same_shape(a, b, "add");
  return EinsteinTensor(a.shape(), a.unfolded() + b.unfolded());
}

EinsteinTensor subtract(const EinsteinTensor& a, const EinsteinTensor& b) {
  require_same_shape(a, b, "subtract");
  return EinsteinTensor(a.shape(), a.unfolded() - b.unfolded());
}

EinsteinTensor scale(const EinsteinTensor& a, Scalar c) {
  return EinsteinTensor(a.shape(), c * a.unfolded());
}

EinsteinTensor einstein_product(const EinsteinTensor& a, const EinsteinTensor& b, std::size_t n) {
  if (a.shape().col_dims() != b.shape().row_dims() || a.shape().col_order() != n) {
    throw ShapeError("einstein product *_" + std::to_string(n) + ": " + a.shape().str() +
                     " with " + b.shape().str());
  }
  PairedShape out(a.shape().row_dims(), b.shape().col_dims());
  return EinsteinTensor(std::move(out), a.unfolded() * b.unfolded());
}

EinsteinTensor conj_transpose(const EinsteinTensor& a) {
  return EinsteinTensor(a.shape().transposed(), adjoint(a.unfolded()));
}

EinsteinTensor kronecker(const EinsteinTensor& a, const EinsteinTensor& b) {
  PairedShape out_shape(concat(a.shape().row_dims(), b.shape().row_dims()),
                        concat(a.shape().col_dims(), b.shape().col_dims()));
  const Matrix& ma = a.unfolded();
  const Matrix& mb = b.unfolded();
  Matrix out(out_shape.row_size(), out_shape.col_size());
  // φ lets the first mode vary fastest, so A's (leading) modes form the
  // low-order part of each combined index.
  for (std::size_t k = 0; k < mb.rows(); ++k)
    for (std::size_t l = 0; l < mb.cols(); ++l) {
      const Scalar bkl = mb(k, l);
      if (bkl == Scalar{}) continue;
      for (std::size_t i = 0; i < ma.rows(); ++i)
        for (std::size_t j = 0; j < ma.cols(); ++j)
          out(i + ma.rows() * k, j + ma.cols() * l) = ma(i, j) * bkl;
    }
  return EinsteinTensor(std::move(out_shape), std::move(out));
}

EinsteinTensor regroup(const EinsteinTensor& a, std::size_t row_modes) {
  const Dims all = concat(a.shape().row_dims(), a.shape().col_dims());
  if (row_modes > all.size()) {
    throw ShapeError("regroup: " + std::to_string(row_modes) + " row modes requested from " +
                     a.shape().str());
  }
  PairedShape out_shape(Dims(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(row_modes)),
                        Dims(all.begin() + static_cast<std::ptrdiff_t>(row_modes), all.end()));
  const std::size_t old_split = a.shape().row_order();

  // Walk every full multi-index (0-based odometer, first mode fastest) and
  // track the old and new unfolded coordinates incrementally.
  std::vector<std::size_t> idx(all.size(), 0);
  Dims stride_old(all.size()), stride_new(all.size());
  {
    std::size_t s = 1;
    for (std::size_t m = 0; m < old_split; ++m) stride_old[m] = s, s *= all[m];
    s = 1;
    for (std::size_t m = old_split; m < all.size(); ++m) stride_old[m] = s, s *= all[m];
    s = 1;
    for (std::size_t m = 0; m < row_modes; ++m) stride_new[m] = s, s *= all[m];
    s = 1;
    for (std::size_t m = row_modes; m < all.size(); ++m) stride_new[m] = s, s *= all[m];
  }
  const Matrix& src = a.unfolded();
  Matrix out(out_shape.row_size(), out_shape.col_size());
  for (std::size_t count = 0; count < a.shape().size(); ++count) {
    std::size_t r_old = 0, c_old = 0, r_new = 0, c_new = 0;
    for (std::size_t m = 0; m < all.size(); ++m) {
      (m < old_split ? r_old : c_old) += idx[m] * stride_old[m];
      (m < row_modes ? r_new : c_new) += idx[m] * stride_new[m];
    }
    out(r_new, c_new) = src(r_old, c_old);
    for (std::size_t m = 0; m < all.size(); ++m) {
      if (++idx[m] < all[m]) break;
      idx[m] = 0;
    }
  }
  return EinsteinTensor(std::move(out_shape), std::move(out));
}

Scalar trace(const EinsteinTensor& a) {
  require_square(a, "trace");
  Scalar sum{};
  for (std::size_t i = 0; i < a.shape().row_size(); ++i) sum += a.unfolded()(i, i);
  return sum;
}

Scalar inner(const EinsteinTensor& a, const EinsteinTensor& b) {
  require_same_shape(a, b, "inner");
  // Tr(Aᴴ ⋆ B) collapses to Σ conj(a)·b over matching entries.
  Scalar sum{};
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) sum += std::conj(ea[k]) * eb[k];
  return sum;
}

double fro_norm(const EinsteinTensor& a) { return frobenius_norm(a.unfolded()); }

bool is_hermitian(const EinsteinTensor& a, double tol) {
  require_square(a, "is_hermitian");
  const double diff = frobenius_norm(a.unfolded() - adjoint(a.unfolded()));
  return diff <= tol * std::max(1.0, fro_norm(a));
}

}  // namespace smwt

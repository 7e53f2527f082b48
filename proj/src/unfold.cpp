// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "unfold.hpp"

#include <string>
#include <utility>

#include "error.hpp"
#include "matkernel.hpp"

namespace smwt {

std::size_t phi_index(std::span<const std::size_t> idx, std::span<const std::size_t> dims) {
  if (idx.size() != dims.size()) {
    throw IndexError("multi-index has " + std::to_string(idx.size()) + " components for " +
                     std::to_string(dims.size()) + " modes");
  }
  std::size_t flat = 1;
  std::size_t stride = 1;
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (idx[m] < 1 || idx[m] > dims[m]) {
      throw IndexError("index component " + std::to_string(m + 1) + " = " +
                       std::to_string(idx[m]) + " outside 1.." + std::to_string(dims[m]));
    }
    flat += (idx[m] - 1) * stride;
    stride *= dims[m];
  }
  return flat;
}

MultiIndex phi_inverse(std::size_t flat, const Dims& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (flat < 1 || flat > total) {
    throw IndexError("flat index " + std::to_string(flat) + " outside 1.." +
                     std::to_string(total));
  }
  MultiIndex out{std::vector<std::size_t>(dims.size()), dims};
  std::size_t rest = flat - 1;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    out.idx[m] = rest % dims[m] + 1;
    rest /= dims[m];
  }
  return out;
}

EinsteinTensor fold(UnfoldedMatrix m, const PairedShape& shape) {
  return EinsteinTensor(shape, std::move(m));
}

RankInfo unfold_rank(const EinsteinTensor& a, double tol) {
  const Matrix& m = a.unfolded();
  const std::vector<double> s = singular_values(m);
  const double cut = rank_threshold(s.empty() ? 0.0 : s.front(), m.rows(), m.cols(), tol);
  RankInfo info;
  while (info.rank < s.size() && s[info.rank] > cut) ++info.rank;
  info.full_row_rank = info.rank == m.rows();
  info.full_column_rank = info.rank == m.cols();
  return info;
}

bool is_invertible(const EinsteinTensor& a, double tol) {
  if (!a.shape().is_square()) {
    throw ShapeError("is_invertible needs a square tensor, got " + a.shape().str());
  }
  return unfold_rank(a, tol).rank == a.shape().row_size();
}

}  // namespace smwt

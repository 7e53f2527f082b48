// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Random problem instances for the low-rank update identities. Projectors
// come from the oracle QR, never from the library's pseudoinverse.

#ifndef SMWT_TESTS_CONSTRUCTIONS_HPP
#define SMWT_TESTS_CONSTRUCTIONS_HPP

#include "oracles.hpp"
#include "smw_update.hpp"

namespace construct {

using oracle::EinsteinTensor;
using oracle::Matrix;
using oracle::PairedShape;
using smwt::Dims;

struct Instance {
  EinsteinTensor A;
  smwt::LowRankUpdate upd;
};

/// Square invertible A over `dims` and an update with core modes `k`,
/// factors scaled by `factor_scale`.
inline Instance invertible(oracle::Rng& rng, const Dims& dims, const Dims& k,
                           double factor_scale = 0.3) {
  EinsteinTensor a = rng.well_conditioned(dims);
  EinsteinTensor b = rng.well_conditioned(k);
  Matrix u = rng.matrix(oracle::product(dims), oracle::product(k));
  Matrix v = rng.matrix(oracle::product(k), oracle::product(dims));
  for (auto& x : u.entries()) x *= factor_scale;
  for (auto& x : v.entries()) x *= factor_scale;
  return Instance{std::move(a),
                  {EinsteinTensor(PairedShape(dims, k), std::move(u)), std::move(b),
                   EinsteinTensor(PairedShape(k, dims), std::move(v))}};
}

enum class Split { kGeneric, kOrthogonal };

/// Rank-deficient A (I|J) whose null spaces on both sides have dimension at
/// least |K|, with U and Vᴴ either generic or projected onto the orthogonal
/// complements of the column spaces, and B invertible. Under these
/// hypotheses Y1 and Y2 have full column rank, so (Y_iᴴY_i) is invertible.
inline Instance moore_penrose(oracle::Rng& rng, const Dims& rows, const Dims& cols, const Dims& k,
                              Split split, bool complex = true) {
  const PairedShape s(rows, cols);
  const std::size_t kk = oracle::product(k);
  const std::size_t max_rank = std::min(s.row_size(), s.col_size()) - kk;
  EinsteinTensor a = rng.tensor_of_rank(s, rng.index(0, max_rank), complex);
  Matrix u = rng.matrix(s.row_size(), kk, complex);
  Matrix vh = rng.matrix(s.col_size(), kk, complex);
  if (split == Split::kOrthogonal) {
    u = oracle::matmul(oracle::complement(oracle::range_projector(a.unfolded())), u);
    vh = oracle::matmul(oracle::complement(oracle::range_projector(adjoint(a.unfolded()))), vh);
  }
  EinsteinTensor b = rng.well_conditioned(k, complex);
  return Instance{std::move(a),
                  {EinsteinTensor(PairedShape(rows, k), std::move(u)), std::move(b),
                   EinsteinTensor(PairedShape(k, cols), adjoint(vh))}};
}

/// Random dims whose product is at most `max_size`.
inline Dims small_dims(oracle::Rng& rng, std::size_t max_modes, std::size_t max_extent,
                       std::size_t max_size) {
  for (;;) {
    Dims d = rng.dims(max_modes, max_extent);
    if (oracle::product(d) <= max_size) return d;
  }
}

}  // namespace construct

#endif  // SMWT_TESTS_CONSTRUCTIONS_HPP

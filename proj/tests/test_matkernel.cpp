// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "matkernel.hpp"
#include "support/displays.hpp"
#include "support/oracles.hpp"

using namespace smwt;

namespace {

double residual(const Matrix& a, const Matrix& b) {
  return oracle::diff_norm(a.entries(), b.entries());
}

Matrix diag(std::initializer_list<double> d) {
  Matrix m(d.size(), d.size());
  std::size_t k = 0;
  for (double x : d) m(k, k) = x, ++k;
  return m;
}

Matrix reconstruct(const Svd& d) {
  Matrix us = d.u;
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t k = 0; k < d.rank(); ++k) us(i, k) *= d.s[k];
  return oracle::matmul(us, adjoint(d.v));
}

void check_svd(const Matrix& m, const Svd& d) {
  const double scale = std::max(1.0, oracle::norm(m.entries()));
  CHECK(residual(m, reconstruct(d)) <= 1e-10 * scale);
  CHECK(residual(oracle::matmul(adjoint(d.u), d.u), Matrix::identity(d.rank())) <= 1e-10);
  CHECK(residual(oracle::matmul(adjoint(d.v), d.v), Matrix::identity(d.rank())) <= 1e-10);
  for (std::size_t k = 1; k < d.rank(); ++k) CHECK(d.s[k] <= d.s[k - 1]);
  if (d.rank() > 0) {
    CHECK(d.s.back() > rank_threshold(d.s.front(), m.rows(), m.cols()));
  }
}

}  // namespace

TEST_CASE("svd of explicit diagonals") {
  const Svd id = svd(Matrix::identity(3));
  CHECK(id.s == std::vector<double>{1.0, 1.0, 1.0});
  const Svd d = svd(diag({3.0, 0.0}));
  REQUIRE(d.rank() == 1);
  CHECK(d.s[0] == 3.0);
  CHECK(svd(Matrix(3, 2)).rank() == 0);
}

TEST_CASE("svd residuals on random matrices") {
  oracle::Rng rng(21);
  for (int k = 0; k < 60; ++k) {
    const std::size_t m = rng.index(1, 9), n = rng.index(1, 9);
    const Matrix a = k % 3 == 0 ? oracle::matmul(rng.matrix(m, 2), rng.matrix(2, n))
                                : rng.matrix(m, n, k % 2 == 0);
    check_svd(a, svd(a));
  }
}

TEST_CASE("singular values agree with the Gram eigenvalues") {
  oracle::Rng rng(22);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = rng.matrix(6, 6);
    const std::vector<double> s = singular_values(a);
    const std::vector<double> ref = oracle::singular_values_from_gram(a);
    REQUIRE(s.size() == ref.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - ref[i]) <= 1e-8 * ref[i]);
  }
}

TEST_CASE("svd rejects non-finite input") {
  Matrix a(2, 2);
  a.entries()[1] = Scalar(NAN, 0.0);
  CHECK_THROWS_AS(svd(a), NumericalError);
  CHECK_THROWS_AS(pinv_matrix(a), NumericalError);
}

TEST_CASE("pinv_matrix") {
  CHECK(residual(pinv_matrix(Matrix::identity(4)), Matrix::identity(4)) == 0.0);
  CHECK(pinv_matrix(Matrix(2, 3)) == Matrix(3, 2));
  const Matrix a = display::square(display::kA).unfolded();
  CHECK(oracle::max_abs_diff(pinv_matrix(a).entries(),
                             display::square(display::kAPinv).unfolded().entries()) <= 1e-10);

  oracle::Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = rng.index(1, 8), n = rng.index(1, 8);
    const std::size_t r = rng.index(0, std::min(m, n));
    const Matrix x = r == 0 ? Matrix(m, n) : oracle::matmul(rng.matrix(m, r), rng.matrix(r, n));
    const Matrix p = pinv_matrix(x);
    const Matrix xp = oracle::matmul(x, p), px = oracle::matmul(p, x);
    const double sx = std::max(1.0, oracle::norm(x.entries()));
    const double sp = std::max(1.0, oracle::norm(p.entries()));
    CHECK(residual(oracle::matmul(xp, x), x) <= 1e-10 * sx);
    CHECK(residual(oracle::matmul(px, p), p) <= 1e-10 * sp);
    CHECK(residual(adjoint(xp), xp) <= 1e-10 * std::max(1.0, oracle::norm(xp.entries())));
    CHECK(residual(adjoint(px), px) <= 1e-10 * std::max(1.0, oracle::norm(px.entries())));
    CHECK(residual(pinv_matrix(p), x) <= 1e-8 * sx);
  }
}

TEST_CASE("inv_matrix") {
  CHECK(inv_matrix(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(oracle::max_abs_diff(inv_matrix(diag({2.0, 4.0})).entries(),
                             diag({0.5, 0.25}).entries()) <= 1e-15);
  oracle::Rng rng(24);
  for (int k = 0; k < 10; ++k) {
    const Matrix a = rng.well_conditioned({8}).unfolded();
    const Matrix ai = inv_matrix(a);
    CHECK(residual(oracle::matmul(a, ai), Matrix::identity(8)) <= 1e-10);
    CHECK(residual(oracle::matmul(ai, a), Matrix::identity(8)) <= 1e-10);
  }
  CHECK_THROWS_AS(inv_matrix(Matrix(2, 3)), ShapeError);
  try {
    inv_matrix(display::square(display::kA).unfolded());
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 3);
  }
}

// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"

namespace smwt {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kRotationTolerance = 1e-14;
const double kEps52 = std::ldexp(1.0, -52);
const double kEps53 = std::ldexp(1.0, -53);

// Column-major working copy; Jacobi rotations act on column pairs.
struct Columns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Scalar* col(std::size_t j) { return data.data() + j * rows; }
  const Scalar* col(std::size_t j) const { return data.data() + j * rows; }
};

struct RawSvd {
  Columns work;  // columns are u_j · σ_j
  Columns v;
  std::vector<double> sigma;
  std::vector<std::size_t> order;  // indices by descending sigma
};

// Orthogonalises the columns of a (rows ≥ cols) in place while
// accumulating the right rotations.
RawSvd jacobi(const Matrix& a) {
  RawSvd out;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  out.work = {m, n, std::vector<Scalar>(m * n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.work.col(j)[i] = a(i, j);
  out.v = {n, n, std::vector<Scalar>(n * n)};
  for (std::size_t j = 0; j < n; ++j) out.v.col(j)[j] = 1.0;

  const double tol = std::max(kRotationTolerance, static_cast<double>(m) * kEps53);
  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Scalar* ap = out.work.col(p);
        Scalar* aq = out.work.col(q);
        double alpha = 0.0, beta = 0.0;
        Scalar gamma{};
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(ap[i]);
          beta += std::norm(aq[i]);
          gamma += std::conj(ap[i]) * aq[i];
        }
        const double g = std::abs(gamma);
        const double scale = std::sqrt(alpha) * std::sqrt(beta);
        if (scale == 0.0 || g <= tol * scale) continue;
        converged = false;

        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        // Rotate the phase of column q so aᴴ_p a_q is real and positive.
        const Scalar phase = std::conj(gamma / g);
        for (std::size_t i = 0; i < m; ++i) {
          const Scalar x = ap[i];
          const Scalar y = aq[i] * phase;
          ap[i] = c * x - s * y;
          aq[i] = s * x + c * y;
        }
        Scalar* vp = out.v.col(p);
        Scalar* vq = out.v.col(q);
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar x = vp[i];
          const Scalar y = vq[i] * phase;
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
      }
    }
  }
  if (!converged) {
    throw NumericalError("Jacobi SVD did not converge in " + std::to_string(kMaxSweeps) +
                         " sweeps");
  }

  out.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double ssq = 0.0;
    const Scalar* aj = out.work.col(j);
    for (std::size_t i = 0; i < m; ++i) ssq += std::norm(aj[i]);
    out.sigma[j] = std::sqrt(ssq);
  }
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t x, std::size_t y) { return out.sigma[x] > out.sigma[y]; });
  return out;
}

void require_finite(const Matrix& m) {
  if (!all_finite(m.entries())) throw NumericalError("SVD input contains non-finite entries");
}

}  // namespace

double rank_threshold(double sigma_max, std::size_t rows, std::size_t cols, double tol) {
  return tol * sigma_max * static_cast<double>(std::max(rows, cols)) * kEps52;
}

std::vector<double> singular_values(const Matrix& m) {
  require_finite(m);
  const bool flip = m.rows() < m.cols();
  const RawSvd raw = jacobi(flip ? adjoint(m) : m);
  std::vector<double> s;
  s.reserve(raw.order.size());
  for (std::size_t j : raw.order) s.push_back(raw.sigma[j]);
  return s;
}

Svd svd(const Matrix& m, double tol) {
  require_finite(m);
  const bool flip = m.rows() < m.cols();
  const RawSvd raw = jacobi(flip ? adjoint(m) : m);

  const double sigma_max = raw.order.empty() ? 0.0 : raw.sigma[raw.order.front()];
  const double threshold = rank_threshold(sigma_max, m.rows(), m.cols(), tol);
  std::size_t r = 0;
  while (r < raw.order.size() && raw.sigma[raw.order[r]] > threshold) ++r;

  // Left vectors of the (possibly flipped) problem come from normalised
  // columns; the right vectors are the accumulated rotations.
  const std::size_t wm = raw.work.rows;
  const std::size_t wn = raw.work.cols;
  Matrix left(wm, r);
  Matrix right(wn, r);
  std::vector<double> s(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t j = raw.order[k];
    s[k] = raw.sigma[j];
    const Scalar* aj = raw.work.col(j);
    for (std::size_t i = 0; i < wm; ++i) left(i, k) = aj[i] / s[k];
    const Scalar* vj = raw.v.col(j);
    for (std::size_t i = 0; i < wn; ++i) right(i, k) = vj[i];
  }
  if (flip) return Svd{std::move(right), std::move(s), std::move(left)};
  return Svd{std::move(left), std::move(s), std::move(right)};
}

namespace {

Matrix pinv_from(const Svd& d, std::size_t rows, std::size_t cols) {
  Matrix out(cols, rows);
  for (std::size_t k = 0; k < d.rank(); ++k) {
    const double inv_s = 1.0 / d.s[k];
    for (std::size_t i = 0; i < cols; ++i) {
      const Scalar vik = d.v(i, k) * inv_s;
      if (vik == Scalar{}) continue;
      for (std::size_t j = 0; j < rows; ++j) out(i, j) += vik * std::conj(d.u(j, k));
    }
  }
  return out;
}

}  // namespace

Matrix pinv_matrix(const Matrix& m, double tol) {
  return pinv_from(svd(m, tol), m.rows(), m.cols());
}

Matrix inv_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("inverse of non-square " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  }
  const Svd d = svd(m);
  if (d.rank() < m.rows()) {
    throw SingularMatrixError("matrix is singular: numerical rank " + std::to_string(d.rank()) +
                                  " of " + std::to_string(m.rows()),
                              d.rank());
  }
  return pinv_from(d, m.rows(), m.cols());
}

}  // namespace smwt

// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "generalized_inverse.hpp"
#include "sensitivity.hpp"
#include "support/constructions.hpp"
#include "support/displays.hpp"

using namespace smwt;

namespace {

EinsteinTensor system_rhs() { return display::column(display::kD); }

}  // namespace

TEST_CASE("solve with the identity") {
  oracle::Rng rng(51);
  const EinsteinTensor d = rng.tensor(PairedShape({2, 3}, {2}));
  const SolveResult r = solve(identity({2, 3}), d);
  CHECK(r.consistent);
  CHECK(oracle::max_abs_diff(r.X.entries(), d.entries()) <= 1e-15);
  CHECK(r.consistency_residual <= 1e-15);
}

TEST_CASE("solve on the singular system") {
  const EinsteinTensor a = display::square(display::kA);
  const SolveResult r = solve(a, system_rhs());
  // X = A†D; the residual A⋆X − D has norm exactly 1 against ‖D‖ = √7.
  const std::vector<Scalar> expected_x = {1.0, 3.0, -0.5, 0.5};
  CHECK(oracle::max_abs_diff(r.X.entries(), expected_x) <= 1e-12);
  CHECK(r.consistency_residual == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-12));
  CHECK_FALSE(r.consistent);
  // Any D in the column space is consistent.
  const SolveResult c = solve(a, a * r.X);
  CHECK(c.consistent);
}

TEST_CASE("solve on invertible systems") {
  oracle::Rng rng(52);
  for (int k = 0; k < 50; ++k) {
    const Dims dims = construct::small_dims(rng, 3, 3, 18);
    const EinsteinTensor a = rng.well_conditioned(dims);
    const EinsteinTensor d = rng.tensor(PairedShape(dims, rng.dims(2, 2)));
    const SolveResult r = solve(a, d);
    CHECK(r.consistent);
    CHECK(fro_norm(a * r.X - d) <= 1e-9 * fro_norm(d));
    CHECK(oracle::rel_diff(r.X, inverse(a) * d) <= 1e-10);
  }
}

TEST_CASE("solve shape errors") {
  CHECK_THROWS_AS(solve(identity({2, 2}), zeros(PairedShape({4}, {1}))), ShapeError);
  CHECK_THROWS_AS(solve(identity({2, 2}), zeros(PairedShape({2, 3}, {1}))), ShapeError);
}

TEST_CASE("norm_bound evaluates the closed form") {
  CHECK(norm_bound(std::sqrt(5.0), std::sqrt(3.5), {0.01, 0.01}) ==
        doctest::Approx(0.04608444074398435).epsilon(1e-14));
  // With ε_A = 0 only the right-hand-side term survives.
  CHECK(norm_bound(3.0, 0.25, {0.0, 0.2}) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(norm_bound(3.0, 0.25, {0.0, 0.0}) == 0.0);
  // a = ap = e = 1, εD = 0: 1·(2 + 1 + 1) = 4.
  CHECK(norm_bound(1.0, 1.0, {1.0, 0.0}) == 4.0);
}

TEST_CASE("norm_bound rejects bad inputs") {
  CHECK_THROWS_AS(norm_bound(-1.0, 1.0, {0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(norm_bound(1.0, -1.0, {0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(norm_bound(1.0, 1.0, {-0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(norm_bound(1.0, 1.0, {0.1, NAN}), DomainError);
  CHECK_THROWS_AS(norm_bound(INFINITY, 1.0, {0.1, 0.1}), DomainError);
}

TEST_CASE("norm_bound is nondecreasing in each argument") {
  oracle::Rng rng(53);
  for (int k = 0; k < 500; ++k) {
    const double a = rng.uniform(0, 5), ap = rng.uniform(0, 5);
    const double ea = rng.uniform(0, 1), ed = rng.uniform(0, 1);
    const double step = rng.uniform(0, 0.5);
    const double base = norm_bound(a, ap, {ea, ed});
    CHECK(norm_bound(a + step, ap, {ea, ed}) >= base);
    CHECK(norm_bound(a, ap + step, {ea, ed}) >= base);
    CHECK(norm_bound(a, ap, {ea + step, ed}) >= base);
    CHECK(norm_bound(a, ap, {ea, ed + step}) >= base);
  }
}

TEST_CASE("measure_error with the worked updates on the system") {
  const EinsteinTensor a = display::square(display::kA);
  const EinsteinTensor d = system_rhs();
  const LowRankUpdate mixed{display::column(display::kMixU), display::unit_core(),
                            display::row(display::kMixV)};
  const BoundReport r = measure_error(a, d, mixed, zeros(d.shape()));
  REQUIRE(r.measured_error.has_value());
  CHECK(*r.measured_error == doctest::Approx(0.3086066999241837).epsilon(1e-10));
  CHECK(r.eps_A == doctest::Approx(0.6324555320336755).epsilon(1e-12));
  CHECK(r.eps_D == 0.0);
  CHECK(r.norm_A == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(r.norm_A_pinv == doctest::Approx(std::sqrt(3.5)).epsilon(1e-12));
  CHECK(r.bound == doctest::Approx(39.79095638169972).epsilon(1e-10));
  CHECK(*r.measured_error <= r.bound);

  const LowRankUpdate orth{display::column(display::kOrthU), display::unit_core(),
                           display::row(display::kOrthV)};
  const BoundReport o = measure_error(a, d, orth, zeros(d.shape()));
  CHECK(*o.measured_error == doctest::Approx(0.21821789023599245).epsilon(1e-10));
  CHECK(*o.measured_error <= o.bound);
}

TEST_CASE("measure_error edge cases") {
  const EinsteinTensor a = display::square(display::kA);
  const LowRankUpdate none{zeros(PairedShape({2, 2}, {1})), zeros(PairedShape({1}, {1})),
                           zeros(PairedShape({1}, {2, 2}))};
  CHECK_THROWS_AS(measure_error(a, zeros(PairedShape({2, 2}, {1})), none,
                                zeros(PairedShape({2, 2}, {1}))),
                  DegenerateSolutionError);
  const EinsteinTensor d = system_rhs();
  CHECK_THROWS_AS(measure_error(a, d, none, zeros(PairedShape({2, 2}, {1}))), ShapeError);
  // B = 0 is a zero perturbation with undefined E_i; the update itself
  // leaves the solution unchanged.
  const LowRankUpdate zero{zeros(PairedShape({2, 2}, {1, 1})), zeros(PairedShape({1, 1}, {1, 1})),
                           zeros(PairedShape({1, 1}, {2, 2}))};
  const BoundReport r = measure_error(a, d, zero, zeros(d.shape()));
  CHECK(*r.measured_error == 0.0);
  CHECK(r.eps_A == 0.0);
  CHECK(r.bound == 0.0);
}

TEST_CASE("sweep scale invariance at eps_A = 0") {
  const EinsteinTensor a = display::square(display::kA);
  const std::vector<double> alphas = {0.25, 0.5, 1.0, 2.0, 4.0};
  const std::vector<BoundReport> rows = sweep(a, system_rhs(), {0.0}, 0.01, alphas);
  REQUIRE(rows.size() == alphas.size());
  const double expected = 0.01 * std::sqrt(5.0) * std::sqrt(3.5);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].alpha == alphas[k]);
    CHECK(rows[k].bound == doctest::Approx(expected).epsilon(1e-14));
    CHECK(rows[k].norm_A == doctest::Approx(alphas[k] * std::sqrt(5.0)).epsilon(1e-15));
    CHECK_FALSE(rows[k].measured_error.has_value());
  }
}

TEST_CASE("sweep order and recomputability") {
  const EinsteinTensor a = display::square(display::kA);
  const std::vector<double> eps = {0.09, 0.05, 0.01};
  const std::vector<double> alphas = {0.5, 1.0, 1.5};
  const std::vector<BoundReport> rows = sweep(a, system_rhs(), eps, 0.01, alphas);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      const BoundReport& r = rows[i * alphas.size() + j];
      CHECK(r.eps_A == eps[i]);
      CHECK(r.alpha == alphas[j]);
      CHECK(r.bound == norm_bound(r.norm_A, r.norm_A_pinv, {r.eps_A, r.eps_D}));
    }
  }
}

TEST_CASE("sweep validation") {
  const EinsteinTensor a = display::square(display::kA);
  const EinsteinTensor d = system_rhs();
  CHECK_THROWS_AS(sweep(a, d, {}, 0.01, {1.0}), DomainError);
  CHECK_THROWS_AS(sweep(a, d, {0.1}, 0.01, {}), DomainError);
  CHECK_THROWS_AS(sweep(a, d, {0.1}, 0.01, {0.0}), DomainError);
  CHECK_THROWS_AS(sweep(a, d, {-0.1}, 0.01, {1.0}), DomainError);
  CHECK_THROWS_AS(sweep(a, d, {0.1}, -0.01, {1.0}), DomainError);
}

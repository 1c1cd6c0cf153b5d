// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ceig/eigensolution.hpp"
#include "test_helpers.hpp"

using namespace ceig;

TEST_CASE("residual of an exact scalar eigenpair is zero")
{
  auto problem = testing::scalar_linear(2.0);
  Matrix v = Matrix::Ones(1, 1);
  ResidualReport report = residual_report(problem, {Complex(2.0)}, v);
  CHECK(report.residuals[0] == doctest::Approx(0.0));
}

TEST_CASE("residual of a perturbed scalar eigenpair is |T(2.1)| = 0.1")
{
  auto problem = testing::scalar_linear(2.0);
  Matrix v = 3.0 * Matrix::Ones(1, 1);  // normalization shouldn't matter
  ResidualReport report = residual_report(problem, {Complex(2.1)}, v);
  CHECK(report.residuals[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(std::abs(v(0, 0)) == doctest::Approx(1.0));  // normalized in place
}

TEST_CASE("first-order residual of T(z) = z^2 - 3z + 2 near the root at 1")
{
  // |T(1 + eps)| = eps * |T'(1)| + O(eps^2) with T'(1) = -1
  auto problem = problems::make_scalar_polynomial({2.0, -3.0, 1.0});
  Matrix v = Matrix::Ones(1, 1);
  ResidualReport report = residual_report(problem, {Complex(1.0 + 1e-6)}, v);
  CHECK(report.residuals[0] == doctest::Approx(1e-6).epsilon(1e-5));
}

TEST_CASE("zero eigenvector column is rejected")
{
  auto problem = testing::scalar_linear(2.0);
  Matrix v = Matrix::Zero(1, 1);
  std::vector<Complex> lambda = {Complex(2.0)};
  CHECK_THROWS_AS(residual_report(problem, lambda, v), std::invalid_argument);
}

TEST_CASE("relative residuals appear for assemblable problems")
{
  auto problem = testing::diag_linear({1.0, 3.0});
  Matrix v(2, 1);
  v << 1.0, 0.0;
  ResidualReport report = residual_report(problem, {Complex(1.1)}, v);
  // T(1.1) = diag(0.1, -1.9); ||T v|| = 0.1, ||T||_F = sqrt(0.01 + 3.61)
  CHECK(report.residuals[0] == doctest::Approx(0.1));
  REQUIRE(report.relative_residuals.size() == 1);
  CHECK(report.relative_residuals[0] ==
        doctest::Approx(0.1 / std::sqrt(0.01 + 3.61)).epsilon(1e-12));
}

TEST_CASE("domain filtering keeps interior eigenvalues and flags boundary ones")
{
  Contour contour = build_contour_circle(0.0, 1.0, 16);
  EigenSolution solution;
  solution.eigenvalues = {Complex(0.5), Complex(3.0), Complex(1.0)};  // last on boundary
  solution.right_eigenvectors = Matrix::Identity(3, 3);
  solution.residuals = {1e-12, 1e-3, 1e-11};

  EigenSolution filtered = filter_eigenvalues_to_domain(solution, contour);
  REQUIRE(filtered.eigenvalues.size() == 2);
  CHECK(filtered.eigenvalues[0] == Complex(0.5));
  CHECK(filtered.eigenvalues[1] == Complex(1.0));
  CHECK(filtered.dropped_outside == 1);
  REQUIRE(filtered.boundary_flagged.size() == 1);
  CHECK(filtered.boundary_flagged[0] == 1);
  CHECK(filtered.residuals == std::vector<double>{1e-12, 1e-11});
  // eigenvector columns follow their eigenvalues
  CHECK(filtered.right_eigenvectors(0, 0) == Complex(1.0));
  CHECK(filtered.right_eigenvectors(2, 1) == Complex(1.0));

  EigenSolution kept = filter_eigenvalues_to_domain(solution, contour, /*keep_all=*/true);
  CHECK(kept.eigenvalues.size() == 3);
  CHECK(kept.dropped_outside == 0);
}

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_PROBLEMS_DELAY_HPP
#define CEIG_PROBLEMS_DELAY_HPP

#include <vector>

#include "ceig/contour.hpp"
#include "ceig/problem.hpp"

namespace ceig::problems
{

// Delay NLEVP T(z) = zI + c·e^{-τz}I - E₀ with diagonal E₀, so every action
// is componentwise. Eigenvalues are the roots of λ + c·e^{-τλ} - e_i = 0.
class DelayProblem : public NlevpProblem
{
public:
  DelayProblem(double c, double tau, RealVector e_values);

  int dim() const override { return static_cast<int>(e_.size()); }
  Matrix apply(Complex z, const Matrix &v) const override;
  Matrix solve(Complex z, const Matrix &b) const override;
  Matrix solve_adjoint(Complex z, const Matrix &b) const override;
  bool has_derivative() const override { return true; }
  Matrix apply_derivative(Complex z, const Matrix &v) const override;
  std::optional<Matrix> assemble(Complex z) const override;

  double c() const { return c_; }
  double tau() const { return tau_; }
  const RealVector &e_values() const { return e_; }

  /// Diagonal of T(z).
  Vector diagonal(Complex z) const;

  /// λ + c e^{-τλ} - e_i for one component.
  Complex characteristic(Complex lambda, int component) const;

private:
  double c_;
  double tau_;
  RealVector e_;
};

/// e_values are n logarithmically spaced magnitudes in [e_min_mag, e_max_mag],
/// negated. The defaults c = 0.015, τ = 8, n = 50, magnitudes 1e-4..1e10
/// reproduce the standard benchmark configuration.
DelayProblem make_delay_problem(double c = 0.015, double tau = 8.0, int n = 50,
                                double e_min_mag = 1e-4, double e_max_mag = 1e10);

struct DelayOracleResult
{
  std::vector<Complex> roots;            // deduplicated, sorted by real part
  std::vector<int> components;           // component index per root
  std::vector<int> flagged_components;   // components where no start converged
};

/// Ground-truth eigenvalues inside a disk: damped Newton from a grid of
/// starts per component, deduplicated; every accepted root satisfies
/// |λ + c·e^{-τλ} - e_i| ≤ 1e-12.
DelayOracleResult delay_eigen_oracle(const DelayProblem &problem, Complex disk_center,
                                     double disk_radius, int grid_per_axis = 40);

}  // namespace ceig::problems

#endif  // CEIG_PROBLEMS_DELAY_HPP

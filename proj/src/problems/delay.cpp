// SPDX-License-Identifier: Apache-2.0

#include "ceig/problems/delay.hpp"

#include <algorithm>
#include <cmath>

namespace ceig::problems
{

DelayProblem::DelayProblem(double c, double tau, RealVector e_values)
  : c_(c), tau_(tau), e_(std::move(e_values))
{
  if (e_.size() < 1)
  {
    throw std::invalid_argument("delay problem requires at least one component");
  }
}

Vector DelayProblem::diagonal(Complex z) const
{
  Complex shift = z + c_ * std::exp(-tau_ * z);
  return shift - e_.cast<Complex>().array();
}

Complex DelayProblem::characteristic(Complex lambda, int component) const
{
  return lambda + c_ * std::exp(-tau_ * lambda) - e_(component);
}

Matrix DelayProblem::apply(Complex z, const Matrix &v) const
{
  return diagonal(z).asDiagonal() * v;
}

Matrix DelayProblem::solve(Complex z, const Matrix &b) const
{
  Vector d = diagonal(z);
  double scale = d.cwiseAbs().maxCoeff();
  for (int i = 0; i < d.size(); i++)
  {
    if (std::abs(d(i)) <= 1e-300 * std::max(scale, 1.0))
    {
      throw PointSingularError(z, "T(z) singular in component " + std::to_string(i));
    }
  }
  return d.cwiseInverse().asDiagonal() * b;
}

Matrix DelayProblem::solve_adjoint(Complex z, const Matrix &b) const
{
  Vector d = diagonal(z).conjugate();
  for (int i = 0; i < d.size(); i++)
  {
    if (std::abs(d(i)) <= 1e-300)
    {
      throw PointSingularError(z, "T(z) singular in component " + std::to_string(i));
    }
  }
  return d.cwiseInverse().asDiagonal() * b;
}

Matrix DelayProblem::apply_derivative(Complex z, const Matrix &v) const
{
  Complex d = 1.0 - c_ * tau_ * std::exp(-tau_ * z);
  return d * v;
}

std::optional<Matrix> DelayProblem::assemble(Complex z) const
{
  return Matrix(diagonal(z).asDiagonal());
}

DelayProblem make_delay_problem(double c, double tau, int n, double e_min_mag,
                                double e_max_mag)
{
  if (n < 1)
  {
    throw std::invalid_argument("delay problem requires n >= 1");
  }
  if (!(e_min_mag > 0.0) || !(e_max_mag > 0.0))
  {
    throw std::invalid_argument("delay spectrum magnitudes must be positive");
  }
  RealVector e(n);
  double lo = std::log10(e_min_mag), hi = std::log10(e_max_mag);
  for (int i = 0; i < n; i++)
  {
    double t = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
    e(i) = -std::pow(10.0, lo + t * (hi - lo));
  }
  return DelayProblem(c, tau, std::move(e));
}

namespace
{

// Damped Newton on f(λ) = λ + c e^{-τλ} - e_i.
std::optional<Complex> newton_root(const DelayProblem &p, int component, Complex start,
                                   double tol, int max_iter)
{
  Complex lam = start;
  for (int it = 0; it < max_iter; it++)
  {
    Complex f = p.characteristic(lam, component);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
    {
      return std::nullopt;
    }
    if (std::abs(f) <= tol)
    {
      return lam;
    }
    Complex fp = 1.0 - p.c() * p.tau() * std::exp(-p.tau() * lam);
    if (fp == Complex(0.0))
    {
      return std::nullopt;
    }
    Complex step = f / fp;
    double damping = 1.0;
    Complex next = lam - step;
    int halvings = 0;
    while (halvings < 60 && (!std::isfinite(std::abs(p.characteristic(next, component))) ||
                             std::abs(p.characteristic(next, component)) >= std::abs(f)))
    {
      damping *= 0.5;
      next = lam - damping * step;
      halvings++;
    }
    if (halvings == 60)
    {
      return std::nullopt;
    }
    lam = next;
  }
  return std::abs(p.characteristic(lam, component)) <= tol ? std::optional<Complex>(lam)
                                                           : std::nullopt;
}

}  // namespace

DelayOracleResult delay_eigen_oracle(const DelayProblem &problem, Complex disk_center,
                                     double disk_radius, int grid_per_axis)
{
  if (!(disk_radius > 0.0))
  {
    throw std::invalid_argument("oracle region radius must be positive");
  }
  const double tol = 1e-12;
  const int n = problem.dim();
  DelayOracleResult result;

  std::vector<std::vector<Complex>> per_component(n);
  std::vector<char> converged_any(n, 0);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; i++)
  {
    std::vector<Complex> roots;
    bool any = false;
    for (int gx = 0; gx < grid_per_axis; gx++)
    {
      for (int gy = 0; gy < grid_per_axis; gy++)
      {
        double x = disk_center.real() +
                   disk_radius * (2.0 * gx / (grid_per_axis - 1.0) - 1.0);
        double y = disk_center.imag() +
                   disk_radius * (2.0 * gy / (grid_per_axis - 1.0) - 1.0);
        auto root = newton_root(problem, i, Complex(x, y), tol, 100);
        if (!root)
        {
          continue;
        }
        any = true;
        if (std::abs(*root - disk_center) > disk_radius)
        {
          continue;
        }
        bool duplicate = false;
        for (Complex existing : roots)
        {
          if (std::abs(existing - *root) <= 1e-9 * std::max(1.0, std::abs(existing)))
          {
            duplicate = true;
            break;
          }
        }
        if (!duplicate)
        {
          roots.push_back(*root);
        }
      }
    }
    per_component[i] = std::move(roots);
    converged_any[i] = any ? 1 : 0;
  }

  for (int i = 0; i < n; i++)
  {
    if (!converged_any[i])
    {
      result.flagged_components.push_back(i);
    }
    for (Complex root : per_component[i])
    {
      result.roots.push_back(root);
      result.components.push_back(i);
    }
  }

  std::vector<int> order(result.roots.size());
  for (std::size_t k = 0; k < order.size(); k++)
  {
    order[k] = static_cast<int>(k);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Complex za = result.roots[a], zb = result.roots[b];
    return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
  });
  DelayOracleResult sorted;
  sorted.flagged_components = std::move(result.flagged_components);
  for (int idx : order)
  {
    sorted.roots.push_back(result.roots[idx]);
    sorted.components.push_back(result.components[idx]);
  }
  return sorted;
}

}  // namespace ceig::problems

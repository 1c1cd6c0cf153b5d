// SPDX-License-Identifier: Apache-2.0

#include "ceig/eigensolution.hpp"

#include <algorithm>

namespace ceig
{

double EigenSolution::max_residual() const
{
  double worst = 0.0;
  for (double r : residuals)
  {
    worst = std::max(worst, r);
  }
  return worst;
}

ResidualReport residual_report(const NlevpProblem &problem,
                               const std::vector<Complex> &eigenvalues, Matrix &eigenvectors)
{
  const int m = static_cast<int>(eigenvalues.size());
  if (eigenvectors.cols() != m)
  {
    throw std::invalid_argument("eigenvalue/eigenvector count mismatch");
  }
  ResidualReport report;
  report.residuals.resize(m);
  for (int j = 0; j < m; j++)
  {
    double norm = eigenvectors.col(j).norm();
    if (norm == 0.0)
    {
      throw std::invalid_argument("eigenvector column " + std::to_string(j) + " is zero");
    }
    eigenvectors.col(j) /= norm;
    double res = problem.apply(eigenvalues[j], eigenvectors.col(j)).norm();
    report.residuals[j] = res;
    report.max_residual = std::max(report.max_residual, res);
    if (auto t = problem.assemble(eigenvalues[j]))
    {
      report.relative_residuals.push_back(res / t->norm());
    }
  }
  if (static_cast<int>(report.relative_residuals.size()) != m)
  {
    report.relative_residuals.clear();
  }
  return report;
}

void residual_report(const NlevpProblem &problem, EigenSolution &solution)
{
  ResidualReport report = residual_report(problem, solution.eigenvalues,
                                          solution.right_eigenvectors);
  solution.residuals = std::move(report.residuals);
  solution.relative_residuals = std::move(report.relative_residuals);
}

EigenSolution filter_eigenvalues_to_domain(EigenSolution solution, const Contour &contour,
                                           bool keep_all)
{
  if (keep_all)
  {
    return solution;
  }
  const int m = static_cast<int>(solution.eigenvalues.size());
  std::vector<int> keep;
  std::vector<int> boundary;
  for (int j = 0; j < m; j++)
  {
    Complex lam = solution.eigenvalues[j];
    bool near = contour.near_boundary(lam);
    if (contour.contains(lam) || near)
    {
      if (near)
      {
        boundary.push_back(static_cast<int>(keep.size()));
      }
      keep.push_back(j);
    }
  }

  EigenSolution out = solution;
  out.eigenvalues.clear();
  out.residuals.clear();
  out.relative_residuals.clear();
  const int kept = static_cast<int>(keep.size());
  out.right_eigenvectors.resize(solution.right_eigenvectors.rows(), kept);
  if (solution.left_eigenvectors.size() > 0)
  {
    out.left_eigenvectors.resize(solution.left_eigenvectors.rows(), kept);
  }
  for (int i = 0; i < kept; i++)
  {
    int j = keep[i];
    out.eigenvalues.push_back(solution.eigenvalues[j]);
    out.right_eigenvectors.col(i) = solution.right_eigenvectors.col(j);
    if (solution.left_eigenvectors.size() > 0)
    {
      out.left_eigenvectors.col(i) = solution.left_eigenvectors.col(j);
    }
    if (!solution.residuals.empty())
    {
      out.residuals.push_back(solution.residuals[j]);
    }
    if (!solution.relative_residuals.empty())
    {
      out.relative_residuals.push_back(solution.relative_residuals[j]);
    }
  }
  out.boundary_flagged = std::move(boundary);
  out.dropped_outside = solution.dropped_outside + (m - kept);
  return out;
}

}  // namespace ceig

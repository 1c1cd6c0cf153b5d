// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_EIGENSOLUTION_HPP
#define CEIG_EIGENSOLUTION_HPP

#include <string>
#include <vector>

#include "ceig/contour.hpp"
#include "ceig/problem.hpp"

namespace ceig
{

struct EigenSolution
{
  std::vector<Complex> eigenvalues;
  Matrix right_eigenvectors;  // n × m̂, unit 2-norm columns once residuals are computed
  Matrix left_eigenvectors;   // n × m̂ when requested, otherwise 0×0

  std::vector<double> residuals;           // ‖T(λ̃_j)ṽ_j‖₂
  std::vector<double> relative_residuals;  // residual / ‖T(λ̃_j)‖_F when assemblable

  std::vector<double> singular_values;  // full spectrum used for rank selection
  int rank_used = 0;
  std::string method;

  double eigenvector_cond = 0.0;   // condition number of the diagonalizing S
  bool defective_warning = false;  // set when eigenvector_cond exceeds threshold
  int dropped_outside = 0;         // pairs removed by domain filtering
  std::vector<int> boundary_flagged;  // indices of kept near-boundary eigenvalues

  bool empty_spectrum() const { return eigenvalues.empty(); }
  double max_residual() const;
};

struct ResidualReport
{
  std::vector<double> residuals;
  std::vector<double> relative_residuals;  // empty if T cannot be assembled
  double max_residual = 0.0;
};

/// Normalizes each eigenvector column to unit 2-norm (in place) and
/// recomputes ‖T(λ̃_j)ṽ_j‖₂ from the problem. Throws on a zero column.
ResidualReport residual_report(const NlevpProblem &problem,
                               const std::vector<Complex> &eigenvalues, Matrix &eigenvectors);

/// Convenience overload filling the solution's residual fields.
void residual_report(const NlevpProblem &problem, EigenSolution &solution);

/// Drops eigenpairs outside the closed contour region (unless keep_all);
/// eigenvalues within 1e-8*radius of the boundary are kept and flagged.
EigenSolution filter_eigenvalues_to_domain(EigenSolution solution, const Contour &contour,
                                           bool keep_all = false);

}  // namespace ceig

#endif  // CEIG_EIGENSOLUTION_HPP

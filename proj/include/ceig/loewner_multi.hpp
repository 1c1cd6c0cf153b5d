// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_LOEWNER_MULTI_HPP
#define CEIG_LOEWNER_MULTI_HPP

#include <functional>
#include <vector>

#include "ceig/eigensolution.hpp"
#include "ceig/moments.hpp"
#include "ceig/svd_rank.hpp"

namespace ceig
{

// Left/right interpolation points with their tangential directions. Each
// direction is a column of a pool matrix (the probing matrix in contour
// mode); entries i and j with θ_i = σ_j are Hermite pairs and take
// derivative data instead of divided differences.
struct InterpolationScheme
{
  std::vector<Complex> left_points;
  std::vector<Complex> right_points;
  std::vector<int> left_dir_index;
  std::vector<int> right_dir_index;
  Matrix left_pool;   // columns are candidate left directions
  Matrix right_pool;  // columns are candidate right directions

  int size() const { return static_cast<int>(left_points.size()); }
  Vector left_direction(int i) const { return left_pool.col(left_dir_index[i]); }
  Vector right_direction(int j) const { return right_pool.col(right_dir_index[j]); }
  bool is_hermite(int i, int j) const { return left_points[i] == right_points[j]; }
  std::vector<std::pair<int, int>> hermite_pairs() const;

  void validate() const;
};

/// The experiments' default: K_sigma distinct points equally spaced on a
/// circle concentric with the contour at radius_ratio times its radius, each
/// point reusing all r_sigma probe columns, with θ_j = σ_j (Hermite mode).
InterpolationScheme make_hermite_circle_scheme(const Contour &contour,
                                               const ProbingConfig &probes, int k_sigma,
                                               int r_sigma,
                                               double radius_ratio = 4.0 / 3.0);

/// Distinct left/right points, each reusing all r_sigma probe columns.
InterpolationScheme make_distinct_point_scheme(const std::vector<Complex> &left_points,
                                               const std::vector<Complex> &right_points,
                                               const ProbingConfig &probes, int r_sigma);

struct MultiPointLoewner
{
  Matrix lmat;  // r × r
  Matrix ls;    // r × r
  Matrix ldm;   // r × n, stacked left samples ld_i^*
  Matrix rdm;   // n × r, right samples rd_j
  InterpolationScheme scheme;

  /// Frobenius residuals of the two Sylvester identities
  /// ls - lmat·diag(σ) = ldm·R and ls - diag(θ)·lmat = L^*·rdm,
  /// relative to ‖ls‖_F.
  std::pair<double, double> sylvester_residuals() const;
};

/// Algorithm-2 assembly from the quadrature tensors. The scheme's direction
/// pools must be the probe matrices that produced the tensors (or column
/// subsets selected by the index lists).
MultiPointLoewner build_multipoint(const QuadratureData &data,
                                   const InterpolationScheme &scheme);

/// SVD-truncates lmat, forms B = Σ^{-1} X^* ls Y, diagonalizes; right
/// eigenvectors are rdm·Y·s_j.
EigenSolution solve_multipoint(const MultiPointLoewner &loewner, const RankPolicy &policy);

SingularValueReport singular_value_report(const MultiPointLoewner &loewner,
                                          const RankPolicy &policy);

// Reduced-order rational interpolant G(z) realized from the Loewner data:
// full-rank form rdm (ls - z·lmat)^{-1} ldm, or the SVD-truncated analog.
class RationalInterpolant
{
public:
  RationalInterpolant(Matrix right_factor, Matrix a_red, Matrix e_red, Matrix left_factor);

  /// G(z); throws PointSingularError when the shifted pencil is singular at z.
  Matrix eval(Complex z) const;

  /// d/dz G(z).
  Matrix eval_derivative(Complex z) const;

  /// Poles of G as the finite eigenvalues of the pencil (a_red, e_red).
  std::vector<Complex> poles() const;

  int order() const { return static_cast<int>(a_red_.rows()); }

private:
  Matrix right_factor_;  // n_out × q
  Matrix a_red_;         // q × q
  Matrix e_red_;         // q × q
  Matrix left_factor_;   // q × n_in
};

/// Full-rank form when lmat is invertible and no policy is supplied;
/// otherwise the SVD-truncated realization at the policy's rank.
RationalInterpolant build_interpolant_rom(const MultiPointLoewner &loewner,
                                          const std::optional<RankPolicy> &policy = {});

// Direct rational approximation of T(z)^{-1} from point samples (no contour):
// Ê = -L, Â = -Ls, with approximate eigenpairs from the pencil (Â, Ê).
struct DirectResolventPencil
{
  Matrix a_hat;  // r × r
  Matrix e_hat;  // r × r
  Matrix b_hat;  // r × n, rows are ld_i^*
  Matrix c_hat;  // n × r, columns are rd_j
  int discarded_infinite = 0;
  EigenSolution approximate;  // method tag "direct"; no in-region guarantee
};

/// Samples ld_i^* = ℓ_i^* T(θ_i)^{-1} and rd_j = T(σ_j)^{-1} r_j directly.
/// Requires θ_i ≠ σ_j for all pairs.
DirectResolventPencil direct_resolvent_pencil(const NlevpProblem &problem,
                                              const InterpolationScheme &scheme);

namespace detail
{
/// Entrywise Loewner assembly from one-sided samples (rows of left_samples
/// are ld_i^*, columns of right_samples are rd_j); hermite_entry(i, j)
/// supplies ℓ_i^* H'(σ_j) r_j for coincident points.
void assemble_loewner(const InterpolationScheme &scheme, const Matrix &left_samples,
                      const Matrix &right_samples,
                      const std::function<Complex(int, int)> &hermite_entry, Matrix &lmat,
                      Matrix &ls);
}  // namespace detail

}  // namespace ceig

#endif  // CEIG_LOEWNER_MULTI_HPP

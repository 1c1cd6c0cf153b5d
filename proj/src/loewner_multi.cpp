// SPDX-License-Identifier: Apache-2.0

#include "ceig/loewner_multi.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "ceig/lapack.hpp"
#include "pencil_detail.hpp"

namespace ceig
{

std::vector<std::pair<int, int>> InterpolationScheme::hermite_pairs() const
{
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size(); i++)
  {
    for (int j = 0; j < size(); j++)
    {
      if (is_hermite(i, j))
      {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

void InterpolationScheme::validate() const
{
  const std::size_t r = left_points.size();
  if (r == 0)
  {
    throw std::invalid_argument("interpolation scheme is empty");
  }
  if (right_points.size() != r || left_dir_index.size() != r || right_dir_index.size() != r)
  {
    throw std::invalid_argument(
        "interpolation scheme requires equally many left and right points and directions");
  }
  for (int idx : left_dir_index)
  {
    if (idx < 0 || idx >= left_pool.cols())
    {
      throw std::invalid_argument("left direction index out of range");
    }
  }
  for (int idx : right_dir_index)
  {
    if (idx < 0 || idx >= right_pool.cols())
    {
      throw std::invalid_argument("right direction index out of range");
    }
  }
}

InterpolationScheme make_hermite_circle_scheme(const Contour &contour,
                                               const ProbingConfig &probes, int k_sigma,
                                               int r_sigma, double radius_ratio)
{
  if (k_sigma < 1 || r_sigma < 1)
  {
    throw std::invalid_argument("scheme requires at least one point and one direction");
  }
  if (r_sigma > probes.left_count() || r_sigma > probes.right_count())
  {
    throw std::invalid_argument("scheme direction count exceeds probe columns");
  }
  if (radius_ratio <= 1.0)
  {
    throw std::invalid_argument("interpolation points must lie outside the contour");
  }
  InterpolationScheme scheme;
  scheme.left_pool = probes.left;
  scheme.right_pool = probes.right;
  Complex center = contour.reference_center();
  double rho = radius_ratio * contour.reference_radius();
  for (int p = 0; p < k_sigma; p++)
  {
    Complex point = center + rho * std::polar(1.0, 2.0 * std::numbers::pi * p / k_sigma);
    for (int q = 0; q < r_sigma; q++)
    {
      scheme.left_points.push_back(point);
      scheme.right_points.push_back(point);
      scheme.left_dir_index.push_back(q);
      scheme.right_dir_index.push_back(q);
    }
  }
  return scheme;
}

InterpolationScheme make_distinct_point_scheme(const std::vector<Complex> &left_points,
                                               const std::vector<Complex> &right_points,
                                               const ProbingConfig &probes, int r_sigma)
{
  if (r_sigma < 1 || r_sigma > probes.left_count() || r_sigma > probes.right_count())
  {
    throw std::invalid_argument("scheme direction count exceeds probe columns");
  }
  InterpolationScheme scheme;
  scheme.left_pool = probes.left;
  scheme.right_pool = probes.right;
  for (std::size_t p = 0; p < left_points.size(); p++)
  {
    for (int q = 0; q < r_sigma; q++)
    {
      scheme.left_points.push_back(left_points[p]);
      scheme.left_dir_index.push_back(q);
    }
  }
  for (std::size_t p = 0; p < right_points.size(); p++)
  {
    for (int q = 0; q < r_sigma; q++)
    {
      scheme.right_points.push_back(right_points[p]);
      scheme.right_dir_index.push_back(q);
    }
  }
  scheme.validate();
  return scheme;
}

std::pair<double, double> MultiPointLoewner::sylvester_residuals() const
{
  const int r = scheme.size();
  Matrix sig_diag = Matrix::Zero(r, r);
  Matrix theta_diag = Matrix::Zero(r, r);
  Matrix dir_left(scheme.left_pool.rows(), r);
  Matrix dir_right(scheme.right_pool.rows(), r);
  for (int i = 0; i < r; i++)
  {
    sig_diag(i, i) = scheme.right_points[i];
    theta_diag(i, i) = scheme.left_points[i];
    dir_left.col(i) = scheme.left_direction(i);
    dir_right.col(i) = scheme.right_direction(i);
  }
  double scale = std::max(ls.norm(), 1e-300);
  double r1 = (ls - lmat * sig_diag - ldm * dir_right).norm() / scale;
  double r2 = (ls - theta_diag * lmat - dir_left.adjoint() * rdm).norm() / scale;
  return {r1, r2};
}

namespace detail
{

// Shared Loewner/shifted-Loewner entry assembly from one-sided samples.
// hermite_entry(i, j) supplies ℓ_i^* H'(σ_j) r_j for coincident points.
void assemble_loewner(const InterpolationScheme &scheme, const Matrix &left_samples,
                      const Matrix &right_samples,
                      const std::function<Complex(int, int)> &hermite_entry, Matrix &lmat,
                      Matrix &ls)
{
  const int r = scheme.size();
  lmat.resize(r, r);
  ls.resize(r, r);
  for (int i = 0; i < r; i++)
  {
    for (int j = 0; j < r; j++)
    {
      Complex theta = scheme.left_points[i];
      Complex sigma = scheme.right_points[j];
      Complex l_dot_rd = scheme.left_direction(i).adjoint() * right_samples.col(j);
      if (scheme.is_hermite(i, j))
      {
        Complex hp = hermite_entry(i, j);
        lmat(i, j) = hp;
        ls(i, j) = sigma * hp + l_dot_rd;
      }
      else
      {
        Complex ld_dot_r = left_samples.row(i) * scheme.right_direction(j);
        lmat(i, j) = (ld_dot_r - l_dot_rd) / (theta - sigma);
        ls(i, j) = (theta * ld_dot_r - sigma * l_dot_rd) / (theta - sigma);
      }
    }
  }
}

}  // namespace detail

MultiPointLoewner build_multipoint(const QuadratureData &data,
                                   const InterpolationScheme &scheme)
{
  scheme.validate();
  if (scheme.left_pool.rows() != data.dim() || scheme.right_pool.rows() != data.dim())
  {
    throw std::invalid_argument("scheme direction dimension does not match problem");
  }
  if (scheme.left_pool != data.probes.left || scheme.right_pool != data.probes.right)
  {
    throw std::invalid_argument(
        "scheme directions must be columns of the probing matrices that produced the "
        "quadrature tensors");
  }
  for (Complex p : scheme.left_points)
  {
    check_point_separation(data.contour, p);
    if (data.contour.contains(p))
    {
      throw std::invalid_argument("left interpolation point " + format_complex(p) +
                                  " lies inside the contour region");
    }
  }
  for (Complex p : scheme.right_points)
  {
    check_point_separation(data.contour, p);
    if (data.contour.contains(p))
    {
      throw std::invalid_argument("right interpolation point " + format_complex(p) +
                                  " lies inside the contour region");
    }
  }

  const int r = scheme.size();
  const int n = data.dim();
  const int n_nodes = data.node_count();
  MultiPointLoewner loewner;
  loewner.scheme = scheme;
  loewner.ldm.resize(r, n);
  loewner.rdm.resize(n, r);

  // Samples per point are independent; node sums stay in fixed order.
#pragma omp parallel for schedule(static)
  for (int i = 0; i < r; i++)
  {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(n);
    Vector col = Vector::Zero(n);
    for (int k = 0; k < n_nodes; k++)
    {
      Complex wl = data.contour.weights[k] / (scheme.left_points[i] - data.contour.nodes[k]);
      Complex wr = data.contour.weights[k] / (scheme.right_points[i] - data.contour.nodes[k]);
      row += wl * data.ql[k].row(scheme.left_dir_index[i]);
      col += wr * data.qr[k].col(scheme.right_dir_index[i]);
    }
    loewner.ldm.row(i) = row;
    loewner.rdm.col(i) = col;
  }

  auto hermite = [&](int i, int j) {
    return hermite_sample(data, scheme.right_points[j], scheme.left_dir_index[i],
                          scheme.right_dir_index[j]);
  };
  detail::assemble_loewner(scheme, loewner.ldm, loewner.rdm, hermite, loewner.lmat,
                           loewner.ls);
  return loewner;
}

EigenSolution solve_multipoint(const MultiPointLoewner &loewner, const RankPolicy &policy)
{
  if (loewner.lmat.norm() == 0.0)
  {
    throw std::invalid_argument("Loewner matrix is identically zero");
  }
  TruncatedSvd svd = truncated_svd(loewner.lmat, policy);

  EigenSolution solution;
  solution.method = "loewnerN";
  solution.singular_values = svd.full_spectrum;
  solution.rank_used = svd.rank;
  if (svd.rank == 0)
  {
    solution.right_eigenvectors.resize(loewner.rdm.rows(), 0);
    return solution;
  }

  Matrix b = svd.singular_values.cwiseInverse().asDiagonal() *
             (svd.u.adjoint() * loewner.ls * svd.v);
  detail::SortedEig eig = detail::sorted_eig(b);
  solution.eigenvalues = eig.values;
  solution.eigenvector_cond = condition_number(eig.vectors);
  solution.defective_warning = solution.eigenvector_cond > detail::kDefectiveCondThreshold;

  solution.right_eigenvectors = loewner.rdm * svd.v * eig.vectors;
  for (int j = 0; j < solution.right_eigenvectors.cols(); j++)
  {
    double norm = solution.right_eigenvectors.col(j).norm();
    if (norm > 0.0)
    {
      solution.right_eigenvectors.col(j) /= norm;
    }
  }
  return solution;
}

SingularValueReport singular_value_report(const MultiPointLoewner &loewner,
                                          const RankPolicy &policy)
{
  return make_singular_value_report(loewner.lmat, policy);
}

RationalInterpolant::RationalInterpolant(Matrix right_factor, Matrix a_red, Matrix e_red,
                                         Matrix left_factor)
  : right_factor_(std::move(right_factor)), a_red_(std::move(a_red)),
    e_red_(std::move(e_red)), left_factor_(std::move(left_factor))
{
}

Matrix RationalInterpolant::eval(Complex z) const
{
  Matrix shifted = a_red_ - z * e_red_;
  Eigen::PartialPivLU<Matrix> lu(shifted);
  if (lu.rcond() < 1e-14)
  {
    throw PointSingularError(z, "shifted Loewner pencil is singular at z = " +
                                    format_complex(z));
  }
  return right_factor_ * lu.solve(left_factor_);
}

Matrix RationalInterpolant::eval_derivative(Complex z) const
{
  Matrix shifted = a_red_ - z * e_red_;
  Eigen::PartialPivLU<Matrix> lu(shifted);
  if (lu.rcond() < 1e-14)
  {
    throw PointSingularError(z, "shifted Loewner pencil is singular at z = " +
                                    format_complex(z));
  }
  Matrix inner = lu.solve(left_factor_);
  return right_factor_ * lu.solve(e_red_ * inner);
}

std::vector<Complex> RationalInterpolant::poles() const
{
  GeneralizedEig eig = generalized_eig(a_red_, e_red_);
  std::vector<Complex> out;
  for (int j = 0; j < static_cast<int>(eig.alphas.size()); j++)
  {
    if (eig.is_finite(j))
    {
      out.push_back(eig.eigenvalue(j));
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

RationalInterpolant build_interpolant_rom(const MultiPointLoewner &loewner,
                                          const std::optional<RankPolicy> &policy)
{
  if (!policy)
  {
    Eigen::PartialPivLU<Matrix> lu(loewner.lmat);
    if (lu.rcond() < 1e-14)
    {
      throw std::invalid_argument(
          "Loewner matrix is numerically singular; pass a rank policy for the truncated "
          "realization");
    }
    return RationalInterpolant(loewner.rdm, loewner.ls, loewner.lmat, loewner.ldm);
  }
  TruncatedSvd svd = truncated_svd(loewner.lmat, *policy);
  if (svd.rank == 0)
  {
    throw std::invalid_argument("Loewner matrix has rank zero under the given policy");
  }
  Matrix sigma = Matrix::Zero(svd.rank, svd.rank);
  sigma.diagonal() = svd.singular_values.cast<Complex>();
  return RationalInterpolant(loewner.rdm * svd.v, svd.u.adjoint() * loewner.ls * svd.v,
                             sigma, svd.u.adjoint() * loewner.ldm);
}

DirectResolventPencil direct_resolvent_pencil(const NlevpProblem &problem,
                                              const InterpolationScheme &scheme)
{
  scheme.validate();
  if (!scheme.hermite_pairs().empty())
  {
    throw std::invalid_argument(
        "direct resolvent sampling requires θ_i ≠ σ_j for all pairs");
  }
  if (scheme.left_pool.rows() != problem.dim() || scheme.right_pool.rows() != problem.dim())
  {
    throw std::invalid_argument("scheme direction dimension does not match problem");
  }

  const int r = scheme.size();
  const int n = problem.dim();
  DirectResolventPencil out;
  out.b_hat.resize(r, n);
  out.c_hat.resize(n, r);
  for (int i = 0; i < r; i++)
  {
    Complex theta = scheme.left_points[i];
    Complex sigma = scheme.right_points[i];
    Matrix ld, rd;
    try
    {
      ld = problem.solve_adjoint(theta, scheme.left_direction(i)).adjoint();  // 1×n
      rd = problem.solve(sigma, scheme.right_direction(i));                   // n×1
    }
    catch (const std::exception &e)
    {
      throw PointSingularError(theta, std::string("sampling failed: ") + e.what());
    }
    if (!ld.allFinite())
    {
      throw PointSingularError(theta, "T(z) is singular at left point " +
                                          format_complex(theta));
    }
    if (!rd.allFinite())
    {
      throw PointSingularError(sigma, "T(z) is singular at right point " +
                                          format_complex(sigma));
    }
    out.b_hat.row(i) = ld;
    out.c_hat.col(i) = rd;
  }

  Matrix lmat, ls;
  detail::assemble_loewner(
      scheme, out.b_hat, out.c_hat,
      [](int, int) -> Complex {
        throw std::logic_error("no Hermite entries in direct mode");
      },
      lmat, ls);
  out.e_hat = -lmat;
  out.a_hat = -ls;

  GeneralizedEig eig = generalized_eig(out.a_hat, out.e_hat);
  std::vector<int> finite;
  for (int j = 0; j < r; j++)
  {
    if (eig.is_finite(j))
    {
      finite.push_back(j);
    }
    else
    {
      out.discarded_infinite++;
    }
  }
  std::sort(finite.begin(), finite.end(), [&](int a, int b) {
    Complex za = eig.eigenvalue(a), zb = eig.eigenvalue(b);
    return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
  });

  out.approximate.method = "direct";
  out.approximate.rank_used = static_cast<int>(finite.size());
  out.approximate.right_eigenvectors.resize(n, static_cast<int>(finite.size()));
  int col = 0;
  for (int j : finite)
  {
    out.approximate.eigenvalues.push_back(eig.eigenvalue(j));
    Vector v = out.c_hat * eig.right_vectors.col(j);
    double norm = v.norm();
    out.approximate.right_eigenvectors.col(col++) = norm > 0.0 ? (v / norm).eval() : v;
  }
  return out;
}

}  // namespace ceig

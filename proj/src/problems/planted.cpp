// SPDX-License-Identifier: Apache-2.0

#include "ceig/problems/planted.hpp"

#include <cmath>

#include "ceig/probing.hpp"

namespace ceig::problems
{

PlantedProblem::PlantedProblem(const PlantedSpec &spec) : n_(spec.dim)
{
  const int m = static_cast<int>(spec.eigenvalues.size());
  if (n_ < 1 || m < 1)
  {
    throw std::invalid_argument("planted problem requires n >= 1 and m >= 1");
  }
  for (int i = 0; i < m; i++)
  {
    for (int j = i + 1; j < m; j++)
    {
      if (spec.eigenvalues[i] == spec.eigenvalues[j])
      {
        throw std::invalid_argument("planted eigenvalues must be distinct");
      }
    }
  }
  lambda_ = spec.eigenvalues;

  std::uint64_t seed = spec.seed;
  if (spec.v_rank > 0 && spec.v_rank < m)
  {
    // Deliberately dependent right eigenvectors: the trailing columns are
    // combinations of the leading v_rank ones.
    Matrix base = complex_gaussian(n_, spec.v_rank, seed);
    Matrix combo = complex_gaussian(spec.v_rank, m - spec.v_rank, seed + 1);
    v_.resize(n_, m);
    v_.leftCols(spec.v_rank) = base;
    v_.rightCols(m - spec.v_rank) = base * combo;
  }
  else
  {
    v_ = complex_gaussian(n_, m, seed);
  }
  w_ = complex_gaussian(n_, m, seed + 2);

  remainder_kind_ = spec.remainder.kind;
  if (remainder_kind_ == RemainderSpec::Kind::Polynomial)
  {
    if (spec.remainder.degree < 0)
    {
      throw std::invalid_argument("polynomial remainder degree must be nonnegative");
    }
    for (int d = 0; d <= spec.remainder.degree; d++)
    {
      poly_coeffs_.push_back(spec.remainder.scale *
                             complex_gaussian(n_, n_, seed + 10 + d));
    }
  }
  else if (remainder_kind_ == RemainderSpec::Kind::Rational)
  {
    if (spec.remainder.poles.empty())
    {
      throw std::invalid_argument("rational remainder requires at least one pole");
    }
    rational_poles_ = spec.remainder.poles;
    for (std::size_t p = 0; p < rational_poles_.size(); p++)
    {
      rational_coeffs_.push_back(spec.remainder.scale *
                                 complex_gaussian(n_, n_, seed + 100 + p));
    }
  }
}

PlantedProblem make_planted_problem(const PlantedSpec &spec)
{
  return PlantedProblem(spec);
}

Matrix PlantedProblem::remainder(Complex z) const
{
  Matrix out = Matrix::Zero(n_, n_);
  if (remainder_kind_ == RemainderSpec::Kind::Polynomial)
  {
    Complex zp = 1.0;
    for (const Matrix &coeff : poly_coeffs_)
    {
      out += zp * coeff;
      zp *= z;
    }
  }
  else if (remainder_kind_ == RemainderSpec::Kind::Rational)
  {
    for (std::size_t p = 0; p < rational_poles_.size(); p++)
    {
      out += rational_coeffs_[p] / (z - rational_poles_[p]);
    }
  }
  return out;
}

Matrix PlantedProblem::remainder_derivative(Complex z, int order) const
{
  if (order < 0)
  {
    throw std::invalid_argument("derivative order must be nonnegative");
  }
  if (order == 0)
  {
    return remainder(z);
  }
  Matrix out = Matrix::Zero(n_, n_);
  if (remainder_kind_ == RemainderSpec::Kind::Polynomial)
  {
    // d^k/dz^k z^d = d!/(d-k)! z^{d-k}
    for (int d = order; d < static_cast<int>(poly_coeffs_.size()); d++)
    {
      double factor = 1.0;
      for (int q = 0; q < order; q++)
      {
        factor *= (d - q);
      }
      out += factor * std::pow(z, d - order) * poly_coeffs_[d];
    }
  }
  else if (remainder_kind_ == RemainderSpec::Kind::Rational)
  {
    // d^k/dz^k (z-p)^{-1} = (-1)^k k! (z-p)^{-(k+1)}
    double factorial = 1.0;
    for (int q = 2; q <= order; q++)
    {
      factorial *= q;
    }
    double sign = (order % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t p = 0; p < rational_poles_.size(); p++)
    {
      out += sign * factorial / std::pow(z - rational_poles_[p], order + 1) *
             rational_coeffs_[p];
    }
  }
  return out;
}

Matrix PlantedProblem::transfer(Complex z) const
{
  const int m = eigenvalue_count();
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    diag(j) = 1.0 / (z - lambda_[j]);
  }
  return v_ * diag.asDiagonal() * w_.adjoint();
}

Matrix PlantedProblem::transfer_derivative(Complex z) const
{
  const int m = eigenvalue_count();
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    Complex d = z - lambda_[j];
    diag(j) = -1.0 / (d * d);
  }
  return v_ * diag.asDiagonal() * w_.adjoint();
}

Matrix PlantedProblem::resolvent(Complex z) const
{
  return transfer(z) + remainder(z);
}

Matrix PlantedProblem::solve(Complex z, const Matrix &b) const
{
  const int m = eigenvalue_count();
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    Complex d = z - lambda_[j];
    if (d == Complex(0.0))
    {
      throw PointSingularError(z, "z coincides with a planted eigenvalue");
    }
    diag(j) = 1.0 / d;
  }
  return v_ * (diag.asDiagonal() * (w_.adjoint() * b)) + remainder(z) * b;
}

Matrix PlantedProblem::solve_adjoint(Complex z, const Matrix &b) const
{
  const int m = eigenvalue_count();
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    Complex d = std::conj(z - lambda_[j]);
    if (d == Complex(0.0))
    {
      throw PointSingularError(z, "z coincides with a planted eigenvalue");
    }
    diag(j) = 1.0 / d;
  }
  return w_ * (diag.asDiagonal() * (v_.adjoint() * b)) + remainder(z).adjoint() * b;
}

Matrix PlantedProblem::apply(Complex z, const Matrix &v) const
{
  Matrix rez = resolvent(z);
  Eigen::PartialPivLU<Matrix> lu(rez);
  if (lu.rcond() < 1e-14)
  {
    throw PointSingularError(
        z, "planted resolvent is numerically singular at z = " + format_complex(z) +
               "; apply() needs an invertible resolvent (nonzero remainder)");
  }
  return lu.solve(v);
}

Matrix PlantedProblem::markov_moment(int order) const
{
  const int m = eigenvalue_count();
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    diag(j) = std::pow(lambda_[j], order);
  }
  return v_ * diag.asDiagonal() * w_.adjoint();
}

Matrix PlantedProblem::sigma_moment(Complex sigma, int order) const
{
  const int m = eigenvalue_count();
  double sign = (order % 2 == 0) ? 1.0 : -1.0;
  Vector diag(m);
  for (int j = 0; j < m; j++)
  {
    diag(j) = sign / std::pow(sigma - lambda_[j], order + 1);
  }
  return v_ * diag.asDiagonal() * w_.adjoint();
}

Matrix PlantedProblem::hankel_observability(const Matrix &probe_left, int block_count) const
{
  const int m = eigenvalue_count();
  const int l = static_cast<int>(probe_left.cols());
  Matrix lv = probe_left.adjoint() * v_;  // ℓ×m
  Matrix out(l * block_count, m);
  Vector powers = Vector::Ones(m);
  for (int i = 0; i < block_count; i++)
  {
    out.middleRows(i * l, l) = lv * powers.asDiagonal();
    for (int j = 0; j < m; j++)
    {
      powers(j) *= lambda_[j];
    }
  }
  return out;
}

Matrix PlantedProblem::hankel_reachability(const Matrix &probe_right, int block_count) const
{
  const int m = eigenvalue_count();
  const int r = static_cast<int>(probe_right.cols());
  Matrix wr = w_.adjoint() * probe_right;  // m×r
  Matrix out(m, r * block_count);
  Vector powers = Vector::Ones(m);
  for (int i = 0; i < block_count; i++)
  {
    out.middleCols(i * r, r) = powers.asDiagonal() * wr;
    for (int j = 0; j < m; j++)
    {
      powers(j) *= lambda_[j];
    }
  }
  return out;
}

Matrix PlantedProblem::single_point_observability(const Matrix &probe_left, Complex sigma,
                                                  int block_count) const
{
  const int m = eigenvalue_count();
  const int l = static_cast<int>(probe_left.cols());
  Matrix lv = probe_left.adjoint() * v_;
  Matrix out(l * block_count, m);
  Vector factors(m);
  for (int j = 0; j < m; j++)
  {
    factors(j) = 1.0 / (sigma - lambda_[j]);
  }
  Vector current = factors;
  double sign = 1.0;
  for (int i = 0; i < block_count; i++)
  {
    out.middleRows(i * l, l) = sign * (lv * current.asDiagonal());
    current = current.cwiseProduct(factors);
    sign = -sign;
  }
  return out;
}

Matrix PlantedProblem::single_point_reachability(const Matrix &probe_right, Complex sigma,
                                                 int block_count) const
{
  const int m = eigenvalue_count();
  const int r = static_cast<int>(probe_right.cols());
  Matrix wr = w_.adjoint() * probe_right;
  Matrix out(m, r * block_count);
  Vector factors(m);
  for (int j = 0; j < m; j++)
  {
    factors(j) = 1.0 / (sigma - lambda_[j]);
  }
  Vector current = factors;
  double sign = 1.0;
  for (int i = 0; i < block_count; i++)
  {
    out.middleCols(i * r, r) = sign * (current.asDiagonal() * wr);
    current = current.cwiseProduct(factors);
    sign = -sign;
  }
  return out;
}

Matrix PlantedProblem::generalized_observability(const InterpolationScheme &scheme) const
{
  const int m = eigenvalue_count();
  const int r = scheme.size();
  Matrix out(r, m);
  for (int i = 0; i < r; i++)
  {
    Eigen::RowVectorXcd lv = scheme.left_direction(i).adjoint() * v_;
    for (int j = 0; j < m; j++)
    {
      out(i, j) = lv(j) / (scheme.left_points[i] - lambda_[j]);
    }
  }
  return out;
}

Matrix PlantedProblem::generalized_reachability(const InterpolationScheme &scheme) const
{
  const int m = eigenvalue_count();
  const int r = scheme.size();
  Matrix out(m, r);
  for (int j = 0; j < r; j++)
  {
    Vector wr = w_.adjoint() * scheme.right_direction(j);
    for (int i = 0; i < m; i++)
    {
      out(i, j) = wr(i) / (scheme.right_points[j] - lambda_[i]);
    }
  }
  return out;
}

MultiPointLoewner PlantedProblem::exact_multipoint(const InterpolationScheme &scheme) const
{
  scheme.validate();
  const int r = scheme.size();
  MultiPointLoewner loewner;
  loewner.scheme = scheme;
  loewner.ldm.resize(r, n_);
  loewner.rdm.resize(n_, r);
  for (int i = 0; i < r; i++)
  {
    loewner.ldm.row(i) = scheme.left_direction(i).adjoint() * transfer(scheme.left_points[i]);
    loewner.rdm.col(i) = transfer(scheme.right_points[i]) * scheme.right_direction(i);
  }
  auto hermite = [&](int i, int j) -> Complex {
    return scheme.left_direction(i).adjoint() *
           transfer_derivative(scheme.right_points[j]) * scheme.right_direction(j);
  };
  ceig::detail::assemble_loewner(scheme, loewner.ldm, loewner.rdm, hermite, loewner.lmat,
                                 loewner.ls);
  return loewner;
}

}  // namespace ceig::problems

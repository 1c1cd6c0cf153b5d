// SPDX-License-Identifier: Apache-2.0

#include "ceig/problems/dense.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ceig::problems
{

Complex CoeffFn::eval(Complex z) const
{
  switch (kind)
  {
    case Kind::One:
      return scale;
    case Kind::Linear:
      return scale * z;
    case Kind::SqrtShift:
      return scale * std::sqrt(z - alpha * alpha);
    case Kind::ExpScale:
      return scale * c * std::exp(-tau * z);
    case Kind::Polynomial:
    {
      Complex acc = 0.0, zp = 1.0;
      for (Complex coeff : poly)
      {
        acc += coeff * zp;
        zp *= z;
      }
      return scale * acc;
    }
  }
  return 0.0;
}

Complex CoeffFn::eval_derivative(Complex z) const
{
  switch (kind)
  {
    case Kind::One:
      return 0.0;
    case Kind::Linear:
      return scale;
    case Kind::SqrtShift:
      return scale * 0.5 / std::sqrt(z - alpha * alpha);
    case Kind::ExpScale:
      return scale * (-tau) * c * std::exp(-tau * z);
    case Kind::Polynomial:
    {
      Complex acc = 0.0, zp = 1.0;
      for (std::size_t d = 1; d < poly.size(); d++)
      {
        acc += static_cast<double>(d) * poly[d] * zp;
        zp *= z;
      }
      return scale * acc;
    }
  }
  return 0.0;
}

CoeffFn CoeffFn::one(Complex scale)
{
  CoeffFn f;
  f.kind = Kind::One;
  f.scale = scale;
  return f;
}

CoeffFn CoeffFn::linear(Complex scale)
{
  CoeffFn f;
  f.kind = Kind::Linear;
  f.scale = scale;
  return f;
}

CoeffFn CoeffFn::sqrt_shift(double alpha, Complex scale)
{
  CoeffFn f;
  f.kind = Kind::SqrtShift;
  f.alpha = alpha;
  f.scale = scale;
  return f;
}

CoeffFn CoeffFn::exp_scale(double c, double tau, Complex scale)
{
  CoeffFn f;
  f.kind = Kind::ExpScale;
  f.c = c;
  f.tau = tau;
  f.scale = scale;
  return f;
}

CoeffFn CoeffFn::polynomial(std::vector<Complex> coeffs, Complex scale)
{
  CoeffFn f;
  f.kind = Kind::Polynomial;
  f.poly = std::move(coeffs);
  f.scale = scale;
  return f;
}

DenseMatrixProblem::DenseMatrixProblem(std::vector<std::pair<CoeffFn, Matrix>> terms)
  : terms_(std::move(terms))
{
  if (terms_.empty())
  {
    throw std::invalid_argument("problem requires at least one coefficient/matrix term");
  }
  n_ = static_cast<int>(terms_[0].second.rows());
  for (const auto &[fn, mat] : terms_)
  {
    if (mat.rows() != n_ || mat.cols() != n_)
    {
      throw std::invalid_argument("all coefficient matrices must be square with equal size");
    }
  }
}

Matrix DenseMatrixProblem::assembled(Complex z) const
{
  Matrix t = Matrix::Zero(n_, n_);
  for (const auto &[fn, mat] : terms_)
  {
    t += fn.eval(z) * mat;
  }
  return t;
}

Matrix DenseMatrixProblem::apply(Complex z, const Matrix &v) const
{
  return assembled(z) * v;
}

Matrix DenseMatrixProblem::solve(Complex z, const Matrix &b) const
{
  Eigen::PartialPivLU<Matrix> lu(assembled(z));
  if (lu.rcond() < 1e-14)
  {
    throw PointSingularError(z, "T(z) is numerically singular at z = " + format_complex(z));
  }
  return lu.solve(b);
}

Matrix DenseMatrixProblem::solve_adjoint(Complex z, const Matrix &b) const
{
  Eigen::PartialPivLU<Matrix> lu(assembled(z));
  if (lu.rcond() < 1e-14)
  {
    throw PointSingularError(z, "T(z) is numerically singular at z = " + format_complex(z));
  }
  return lu.adjoint().solve(b);
}

Matrix DenseMatrixProblem::apply_derivative(Complex z, const Matrix &v) const
{
  Matrix t = Matrix::Zero(n_, n_);
  for (const auto &[fn, mat] : terms_)
  {
    t += fn.eval_derivative(z) * mat;
  }
  return t * v;
}

std::optional<Matrix> DenseMatrixProblem::assemble(Complex z) const
{
  return assembled(z);
}

namespace
{

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Matrix load_matrix_market(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open Matrix Market file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line))
  {
    throw std::runtime_error("empty Matrix Market file: " + path.string());
  }
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix")
  {
    throw std::runtime_error("not a Matrix Market matrix file: " + path.string());
  }
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (field == "pattern")
  {
    throw std::runtime_error("pattern matrices are not supported: " + path.string());
  }

  // skip comments
  while (std::getline(in, line))
  {
    if (!line.empty() && line[0] != '%')
    {
      break;
    }
  }
  std::istringstream sizes(line);

  auto read_value = [&](std::istream &s) -> Complex {
    double re = 0.0, im = 0.0;
    if (field == "complex")
    {
      s >> re >> im;
    }
    else
    {
      s >> re;
    }
    return {re, im};
  };

  if (format == "array")
  {
    int rows = 0, cols = 0;
    sizes >> rows >> cols;
    if (rows <= 0 || cols <= 0)
    {
      throw std::runtime_error("bad dimensions in " + path.string());
    }
    Matrix out = Matrix::Zero(rows, cols);
    // column-major; symmetric variants store the lower triangle
    for (int j = 0; j < cols; j++)
    {
      int i0 = (symmetry == "general") ? 0 : ((symmetry == "skew-symmetric") ? j + 1 : j);
      for (int i = i0; i < rows; i++)
      {
        Complex v = read_value(in);
        out(i, j) = v;
        if (i != j)
        {
          if (symmetry == "symmetric")
          {
            out(j, i) = v;
          }
          else if (symmetry == "hermitian")
          {
            out(j, i) = std::conj(v);
          }
          else if (symmetry == "skew-symmetric")
          {
            out(j, i) = -v;
          }
        }
      }
    }
    if (!in)
    {
      throw std::runtime_error("truncated Matrix Market data in " + path.string());
    }
    return out;
  }
  if (format == "coordinate")
  {
    int rows = 0, cols = 0;
    long nnz = 0;
    sizes >> rows >> cols >> nnz;
    if (rows <= 0 || cols <= 0 || nnz < 0)
    {
      throw std::runtime_error("bad dimensions in " + path.string());
    }
    Matrix out = Matrix::Zero(rows, cols);
    for (long k = 0; k < nnz; k++)
    {
      int i = 0, j = 0;
      in >> i >> j;
      Complex v = read_value(in);
      if (!in || i < 1 || j < 1 || i > rows || j > cols)
      {
        throw std::runtime_error("bad coordinate entry in " + path.string());
      }
      out(i - 1, j - 1) = v;
      if (i != j)
      {
        if (symmetry == "symmetric")
        {
          out(j - 1, i - 1) = v;
        }
        else if (symmetry == "hermitian")
        {
          out(j - 1, i - 1) = std::conj(v);
        }
        else if (symmetry == "skew-symmetric")
        {
          out(j - 1, i - 1) = -v;
        }
      }
    }
    return out;
  }
  throw std::runtime_error("unsupported Matrix Market format '" + format + "' in " +
                           path.string());
}

DenseMatrixProblem load_matrix_problem(
    const std::vector<std::pair<CoeffFn, std::filesystem::path>> &combiner)
{
  if (combiner.empty())
  {
    throw std::invalid_argument("combiner must name at least one matrix term");
  }
  std::vector<std::pair<CoeffFn, Matrix>> terms;
  for (const auto &[fn, path] : combiner)
  {
    terms.emplace_back(fn, load_matrix_market(path));
  }
  return DenseMatrixProblem(std::move(terms));
}

DenseMatrixProblem make_polynomial_problem(std::vector<Matrix> coeffs)
{
  if (coeffs.empty())
  {
    throw std::invalid_argument("polynomial problem requires at least one coefficient");
  }
  std::vector<std::pair<CoeffFn, Matrix>> terms;
  for (std::size_t d = 0; d < coeffs.size(); d++)
  {
    std::vector<Complex> poly(d + 1, Complex(0.0));
    poly[d] = 1.0;
    terms.emplace_back(CoeffFn::polynomial(std::move(poly)), std::move(coeffs[d]));
  }
  return DenseMatrixProblem(std::move(terms));
}

DenseMatrixProblem make_scalar_polynomial(std::vector<Complex> coeffs)
{
  std::vector<Matrix> mats;
  for (Complex c : coeffs)
  {
    Matrix m(1, 1);
    m(0, 0) = c;
    mats.push_back(std::move(m));
  }
  return make_polynomial_problem(std::move(mats));
}

bool node_on_branch_cut(const CoeffFn &fn, Complex z, double tol)
{
  if (fn.kind != CoeffFn::Kind::SqrtShift)
  {
    return false;
  }
  Complex shifted = z - fn.alpha * fn.alpha;
  return std::abs(shifted.imag()) <= tol * std::max(1.0, std::abs(shifted)) &&
         shifted.real() <= 0.0;
}

std::vector<int> branch_cut_node_warnings(const DenseMatrixProblem &problem,
                                          const Contour &contour)
{
  std::vector<int> flagged;
  for (int k = 0; k < contour.node_count(); k++)
  {
    for (const auto &[fn, mat] : problem.terms())
    {
      if (node_on_branch_cut(fn, contour.nodes[k]))
      {
        flagged.push_back(k);
        break;
      }
    }
  }
  return flagged;
}

}  // namespace ceig::problems

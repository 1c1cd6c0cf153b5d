// SPDX-License-Identifier: Apache-2.0

#include "ceig/modal.hpp"

#include <algorithm>
#include <iostream>

#include "pencil_detail.hpp"

namespace ceig
{

LtiSource::LtiSource(std::function<Matrix(Complex)> evaluator, int n_outputs, int n_inputs,
                     int order)
  : evaluator_(std::move(evaluator)), n_outputs_(n_outputs), n_inputs_(n_inputs),
    order_(order)
{
  if (!evaluator_)
  {
    throw std::invalid_argument("transfer source requires an evaluator");
  }
}

LtiSource LtiSource::from_state_space(Matrix a, Matrix b, Matrix c)
{
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n || c.cols() != n)
  {
    throw std::invalid_argument("state-space dimensions are inconsistent");
  }
  // eval() uses the state-space path directly; the evaluator slot is unused.
  LtiSource source([](Complex) -> Matrix { return Matrix(); }, static_cast<int>(c.rows()),
                   static_cast<int>(b.cols()), n);
  source.has_state_space_ = true;
  source.a_ = std::move(a);
  source.b_ = std::move(b);
  source.c_ = std::move(c);
  return source;
}

Matrix LtiSource::eval(Complex z) const
{
  if (has_state_space_)
  {
    Matrix shifted = z * Matrix::Identity(order_, order_) - a_;
    Eigen::PartialPivLU<Matrix> lu(shifted);
    if (lu.rcond() < 1e-14)
    {
      throw PointSingularError(z, "zI - A is singular at z = " + format_complex(z));
    }
    return c_ * lu.solve(b_);
  }
  return evaluator_(z);
}

Matrix ModalRom::eval(Complex z) const
{
  Matrix out = Matrix::Zero(c_factors.rows(), b_factors.rows());
  for (int j = 0; j < order(); j++)
  {
    out += (c_factors.col(j) * b_factors.col(j).adjoint()) / (z - poles[j]);
  }
  return out;
}

MultiPointLoewner sample_retained(const LtiSource &source, const Contour &contour,
                                  const InterpolationScheme &scheme)
{
  scheme.validate();
  if (scheme.left_pool.rows() != source.n_outputs() ||
      scheme.right_pool.rows() != source.n_inputs())
  {
    throw std::invalid_argument(
        "scheme direction dimensions must match the transfer function's outputs/inputs");
  }
  for (Complex p : scheme.left_points)
  {
    check_point_separation(contour, p);
    if (contour.contains(p))
    {
      throw std::invalid_argument("interpolation point " + format_complex(p) +
                                  " lies inside the truncation contour");
    }
  }
  for (Complex p : scheme.right_points)
  {
    check_point_separation(contour, p);
    if (contour.contains(p))
    {
      throw std::invalid_argument("interpolation point " + format_complex(p) +
                                  " lies inside the truncation contour");
    }
  }

  const int n_nodes = contour.node_count();
  std::vector<Matrix> g_nodes(n_nodes);
  std::vector<std::string> failures(n_nodes);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n_nodes; k++)
  {
    try
    {
      g_nodes[k] = source.eval(contour.nodes[k]);
      if (!g_nodes[k].allFinite())
      {
        failures[k] = "non-finite transfer values";
      }
    }
    catch (const std::exception &e)
    {
      failures[k] = e.what();
    }
  }
  for (int k = 0; k < n_nodes; k++)
  {
    if (!failures[k].empty())
    {
      throw NodeSingularError(k, contour.nodes[k],
                              "transfer evaluation failed at node " + std::to_string(k + 1) +
                                  ", z = " + format_complex(contour.nodes[k]) + " (" +
                                  failures[k] + ")");
    }
  }

  const int r = scheme.size();
  MultiPointLoewner samples;
  samples.scheme = scheme;
  samples.ldm.resize(r, source.n_inputs());
  samples.rdm.resize(source.n_outputs(), r);
  for (int i = 0; i < r; i++)
  {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(source.n_inputs());
    Vector col = Vector::Zero(source.n_outputs());
    Eigen::RowVectorXcd lg = scheme.left_direction(i).adjoint();
    for (int k = 0; k < n_nodes; k++)
    {
      Complex wl = contour.weights[k] / (scheme.left_points[i] - contour.nodes[k]);
      Complex wr = contour.weights[k] / (scheme.right_points[i] - contour.nodes[k]);
      row += wl * (lg * g_nodes[k]);
      col += wr * (g_nodes[k] * scheme.right_direction(i));
    }
    samples.ldm.row(i) = row;
    samples.rdm.col(i) = col;
  }

  // Interpolation points that drift near a truncated exterior pole blow the
  // sample magnitude up; warn when one dwarfs the median.
  std::vector<double> magnitudes;
  for (int i = 0; i < r; i++)
  {
    magnitudes.push_back(samples.ldm.row(i).norm());
    magnitudes.push_back(samples.rdm.col(i).norm());
  }
  std::vector<double> sorted = magnitudes;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[sorted.size() / 2];
  if (median > 0.0)
  {
    for (std::size_t i = 0; i < magnitudes.size(); i++)
    {
      if (magnitudes[i] > 1e3 * median)
      {
        std::cerr << "ceig: warning: modal sample " << i << " exceeds 1e3x the median "
                  << "magnitude; an interpolation point may sit near a truncated pole\n";
        break;
      }
    }
  }

  auto hermite = [&](int i, int j) -> Complex {
    Complex sum = 0.0;
    for (int k = 0; k < n_nodes; k++)
    {
      Complex d = scheme.right_points[j] - contour.nodes[k];
      Complex probed = scheme.left_direction(i).adjoint() * g_nodes[k] *
                       scheme.right_direction(j);
      sum += -contour.weights[k] / (d * d) * probed;
    }
    return sum;
  };
  detail::assemble_loewner(scheme, samples.ldm, samples.rdm, hermite, samples.lmat,
                           samples.ls);
  return samples;
}

ModalRom modal_truncate(const LtiSource &source, const Contour &contour,
                        const InterpolationScheme &scheme, const RankPolicy &policy)
{
  MultiPointLoewner samples = sample_retained(source, contour, scheme);
  TruncatedSvd svd = truncated_svd(samples.lmat, policy);

  ModalRom rom;
  rom.singular_values = svd.full_spectrum;
  if (svd.rank == 0)
  {
    rom.under_resolved = true;
    rom.c_factors.resize(source.n_outputs(), 0);
    rom.b_factors.resize(source.n_inputs(), 0);
    return rom;
  }

  Matrix b = svd.singular_values.cwiseInverse().asDiagonal() *
             (svd.u.adjoint() * samples.ls * svd.v);
  detail::SortedEig eig = detail::sorted_eig(b);

  // G_r(z) = (rdm Y S)(Λ - zI)^{-1}(S^{-1}Σ^{-1}X^* ldm)
  //        = Σ_j (rdm Y s_j)(-row_j(S^{-1}Σ^{-1}X^* ldm))/(z - λ_j).
  Matrix c_all = samples.rdm * svd.v * eig.vectors;
  Matrix b_rows = -(eig.vectors.partialPivLu().solve(
      svd.singular_values.cwiseInverse().asDiagonal() * (svd.u.adjoint() * samples.ldm)));

  rom.poles = eig.values;
  rom.c_factors.resize(source.n_outputs(), svd.rank);
  rom.b_factors.resize(source.n_inputs(), svd.rank);
  for (int j = 0; j < svd.rank; j++)
  {
    Vector bj = b_rows.row(j).adjoint();  // so that residue = c_j b_j^*
    double norm = bj.norm();
    if (norm > 0.0)
    {
      rom.b_factors.col(j) = bj / norm;
      rom.c_factors.col(j) = c_all.col(j) * norm;
    }
    else
    {
      rom.b_factors.col(j) = bj;
      rom.c_factors.col(j) = c_all.col(j);
    }
    if (!contour.contains(rom.poles[j]) &&
        !contour.near_boundary(rom.poles[j], 1e-8))
    {
      rom.poles_outside_contour++;
    }
  }

  for (int i = 0; i < svd.rank && !rom.clustered_poles; i++)
  {
    for (int j = i + 1; j < svd.rank; j++)
    {
      double scale = std::max({std::abs(rom.poles[i]), std::abs(rom.poles[j]), 1e-300});
      if (std::abs(rom.poles[i] - rom.poles[j]) <= 1e-8 * scale)
      {
        rom.clustered_poles = true;
        break;
      }
    }
  }
  return rom;
}

}  // namespace ceig

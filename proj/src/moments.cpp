// SPDX-License-Identifier: Apache-2.0

#include "ceig/moments.hpp"

namespace ceig
{

double MomentSet::probing_consistency_error(const ProbingConfig &probes) const
{
  double worst = 0.0;
  for (int k = 0; k < order_count(); k++)
  {
    Matrix via_right = probes.left.adjoint() * right_blocks[k];
    Matrix via_left = left_blocks[k] * probes.right;
    double scale = std::max(two_sided[k].norm(), 1e-300);
    worst = std::max(worst, (via_right - two_sided[k]).norm() / scale);
    worst = std::max(worst, (via_left - two_sided[k]).norm() / scale);
  }
  return worst;
}

MomentSet markov_moments(const QuadratureData &data, int order_max)
{
  if (order_max < 0)
  {
    throw std::invalid_argument("moment order must be nonnegative");
  }
  const int n_nodes = data.node_count();
  MomentSet set;
  set.at_infinity = true;
  set.order_max = order_max;
  set.left_blocks.assign(order_max + 1,
                         Matrix::Zero(data.left_count(), data.dim()));
  set.right_blocks.assign(order_max + 1,
                          Matrix::Zero(data.dim(), data.right_count()));
  set.two_sided.assign(order_max + 1,
                       Matrix::Zero(data.left_count(), data.right_count()));

  // Parallel over moment orders; each order sums nodes in a fixed sequential
  // order so results do not depend on the thread count.
#pragma omp parallel for schedule(static)
  for (int k = 0; k <= order_max; k++)
  {
    Matrix left = Matrix::Zero(data.left_count(), data.dim());
    Matrix right = Matrix::Zero(data.dim(), data.right_count());
    for (int j = 0; j < n_nodes; j++)
    {
      Complex coeff = data.contour.weights[j] * std::pow(data.contour.nodes[j], k);
      left += coeff * data.ql[j];
      right += coeff * data.qr[j];
    }
    set.left_blocks[k] = left;
    set.right_blocks[k] = right;
    set.two_sided[k] = left * data.probes.right;
  }
  return set;
}

namespace
{

void check_sigma_outside(const QuadratureData &data, Complex sigma)
{
  check_point_separation(data.contour, sigma);
  if (data.contour.contains(sigma))
  {
    throw std::invalid_argument("expansion point " + format_complex(sigma) +
                                " lies inside or on the contour region");
  }
}

}  // namespace

MomentSet sigma_moments(const QuadratureData &data, Complex sigma, int order_max)
{
  if (order_max < 0)
  {
    throw std::invalid_argument("moment order must be nonnegative");
  }
  check_sigma_outside(data, sigma);

  const int n_nodes = data.node_count();
  MomentSet set;
  set.at_infinity = false;
  set.sigma = sigma;
  set.order_max = order_max;
  set.left_blocks.assign(order_max + 1, Matrix());
  set.right_blocks.assign(order_max + 1, Matrix());
  set.two_sided.assign(order_max + 1, Matrix());

#pragma omp parallel for schedule(static)
  for (int k = 0; k <= order_max; k++)
  {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    Matrix left = Matrix::Zero(data.left_count(), data.dim());
    Matrix right = Matrix::Zero(data.dim(), data.right_count());
    for (int j = 0; j < n_nodes; j++)
    {
      Complex coeff = sign * data.contour.weights[j] /
                      std::pow(sigma - data.contour.nodes[j], k + 1);
      left += coeff * data.ql[j];
      right += coeff * data.qr[j];
    }
    set.left_blocks[k] = left;
    set.right_blocks[k] = right;
    set.two_sided[k] = left * data.probes.right;
  }
  return set;
}

Vector point_sample(const QuadratureData &data, Complex point, SampleSide side,
                    int direction_index)
{
  check_sigma_outside(data, point);
  const int n_nodes = data.node_count();
  if (side == SampleSide::Left)
  {
    if (direction_index < 0 || direction_index >= data.left_count())
    {
      throw std::invalid_argument("left direction index out of range");
    }
    Vector row = Vector::Zero(data.dim());
    for (int k = 0; k < n_nodes; k++)
    {
      Complex coeff = data.contour.weights[k] / (point - data.contour.nodes[k]);
      row += coeff * data.ql[k].row(direction_index).transpose();
    }
    return row;  // (ℓ_i^* H(θ_i))^T
  }
  if (direction_index < 0 || direction_index >= data.right_count())
  {
    throw std::invalid_argument("right direction index out of range");
  }
  Vector col = Vector::Zero(data.dim());
  for (int k = 0; k < n_nodes; k++)
  {
    Complex coeff = data.contour.weights[k] / (point - data.contour.nodes[k]);
    col += coeff * data.qr[k].col(direction_index);
  }
  return col;
}

Complex hermite_sample(const QuadratureData &data, Complex sigma, int left_index,
                       int right_index)
{
  check_sigma_outside(data, sigma);
  if (left_index < 0 || left_index >= data.left_count() || right_index < 0 ||
      right_index >= data.right_count())
  {
    throw std::invalid_argument("probe direction index out of range");
  }
  Complex sum = 0.0;
  for (int k = 0; k < data.node_count(); k++)
  {
    Complex d = sigma - data.contour.nodes[k];
    Complex probed = data.ql[k].row(left_index) * data.probes.right.col(right_index);
    sum += -data.contour.weights[k] / (d * d) * probed;
  }
  return sum;
}

Matrix interior_remainder_sample(const QuadratureData &data, Complex sigma, int order)
{
  if (order < 0)
  {
    throw std::invalid_argument("derivative order must be nonnegative");
  }
  check_point_separation(data.contour, sigma);
  if (!data.contour.contains(sigma))
  {
    throw std::invalid_argument("remainder sampling point " + format_complex(sigma) +
                                " must lie strictly inside the contour region");
  }
  Matrix sum = Matrix::Zero(data.left_count(), data.right_count());
  for (int j = 0; j < data.node_count(); j++)
  {
    Complex coeff =
        data.contour.weights[j] / std::pow(sigma - data.contour.nodes[j], order + 1);
    sum += coeff * (data.ql[j] * data.probes.right);
  }
  return sum;
}

}  // namespace ceig

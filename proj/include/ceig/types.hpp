// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_TYPES_HPP
#define CEIG_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <Eigen/Dense>

namespace ceig
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// T(z_k) is singular (or numerically singular) at a quadrature node:
/// the contour passes through an eigenvalue.
class NodeSingularError : public std::runtime_error
{
public:
  NodeSingularError(int node_index, Complex node, const std::string &what)
    : std::runtime_error(what), node_index(node_index), node(node)
  {
  }
  int node_index;
  Complex node;
};

/// An evaluation point collides with a quadrature node (1/(point - node) pole).
class PoleError : public std::runtime_error
{
public:
  PoleError(Complex point, const std::string &what) : std::runtime_error(what), point(point)
  {
  }
  Complex point;
};

/// T(z) could not be inverted at a sampling point away from the contour.
class PointSingularError : public std::runtime_error
{
public:
  PointSingularError(Complex point, const std::string &what)
    : std::runtime_error(what), point(point)
  {
  }
  Complex point;
};

std::string format_complex(Complex z);

}  // namespace ceig

#endif  // CEIG_TYPES_HPP

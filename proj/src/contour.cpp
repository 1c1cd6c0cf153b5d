// SPDX-License-Identifier: Apache-2.0

#include "ceig/contour.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>

namespace ceig
{

std::string format_complex(Complex z)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

double Contour::reference_radius() const
{
  switch (kind)
  {
    case ContourKind::Circle:
      return radius;
    case ContourKind::Ellipse:
      return std::max(semi_axis_re, semi_axis_im);
    case ContourKind::Custom:
    {
      Complex c = reference_center();
      double r = 0.0;
      for (Complex z : nodes)
      {
        r = std::max(r, std::abs(z - c));
      }
      return r;
    }
  }
  return 0.0;
}

Complex Contour::reference_center() const
{
  if (kind != ContourKind::Custom)
  {
    return center;
  }
  Complex sum = 0.0;
  for (Complex z : nodes)
  {
    sum += z;
  }
  return nodes.empty() ? Complex(0.0) : sum / static_cast<double>(nodes.size());
}

bool Contour::contains(Complex z) const
{
  switch (kind)
  {
    case ContourKind::Circle:
      return std::abs(z - center) <= radius;
    case ContourKind::Ellipse:
    {
      double x = (z.real() - center.real()) / semi_axis_re;
      double y = (z.imag() - center.imag()) / semi_axis_im;
      return x * x + y * y <= 1.0;
    }
    case ContourKind::Custom:
      if (!inside_predicate)
      {
        throw std::invalid_argument(
            "custom contour has no inside predicate; membership is undecidable");
      }
      return inside_predicate(z);
  }
  return false;
}

bool Contour::near_boundary(Complex z, double rel_tol) const
{
  double tol = rel_tol * reference_radius();
  switch (kind)
  {
    case ContourKind::Circle:
      return std::abs(std::abs(z - center) - radius) <= tol;
    case ContourKind::Ellipse:
    {
      double x = (z.real() - center.real()) / semi_axis_re;
      double y = (z.imag() - center.imag()) / semi_axis_im;
      return std::abs(std::sqrt(x * x + y * y) - 1.0) * reference_radius() <= tol;
    }
    case ContourKind::Custom:
      return false;
  }
  return false;
}

namespace
{

void check_node_count(int n_nodes)
{
  if (n_nodes < 2)
  {
    throw std::invalid_argument("contour requires at least 2 quadrature nodes");
  }
}

}  // namespace

Contour build_contour_circle(Complex center, double radius, int n_nodes)
{
  check_node_count(n_nodes);
  if (!(radius > 0.0))
  {
    throw std::invalid_argument("contour radius must be positive");
  }
  Contour c;
  c.kind = ContourKind::Circle;
  c.center = center;
  c.radius = radius;
  c.nodes.resize(n_nodes);
  c.weights.resize(n_nodes);
  for (int k = 1; k <= n_nodes; k++)
  {
    double theta = 2.0 * std::numbers::pi * k / n_nodes;
    Complex rot = std::polar(1.0, theta);
    c.nodes[k - 1] = center + radius * rot;
    c.weights[k - 1] = radius * rot / static_cast<double>(n_nodes);
  }
  return c;
}

Contour build_contour_ellipse(Complex center, double semi_axis_re, double semi_axis_im,
                              int n_nodes)
{
  check_node_count(n_nodes);
  if (!(semi_axis_re > 0.0) || !(semi_axis_im > 0.0))
  {
    throw std::invalid_argument("ellipse semi-axes must be positive");
  }
  Contour c;
  c.kind = ContourKind::Ellipse;
  c.center = center;
  c.semi_axis_re = semi_axis_re;
  c.semi_axis_im = semi_axis_im;
  c.nodes.resize(n_nodes);
  c.weights.resize(n_nodes);
  for (int k = 1; k <= n_nodes; k++)
  {
    double theta = 2.0 * std::numbers::pi * k / n_nodes;
    double ct = std::cos(theta), st = std::sin(theta);
    c.nodes[k - 1] = center + Complex(semi_axis_re * ct, semi_axis_im * st);
    // ζ'(θ)/(i N) with ζ'(θ) = -a sin θ + i b cos θ
    c.weights[k - 1] =
        Complex(semi_axis_im * ct, semi_axis_re * st) / static_cast<double>(n_nodes);
  }
  return c;
}

Contour build_contour_custom(std::vector<Complex> nodes, std::vector<Complex> weights,
                             std::function<bool(Complex)> inside_predicate)
{
  if (nodes.size() != weights.size())
  {
    throw std::invalid_argument("custom contour: node/weight lists must have equal length");
  }
  check_node_count(static_cast<int>(nodes.size()));
  Contour c;
  c.kind = ContourKind::Custom;
  c.nodes = std::move(nodes);
  c.weights = std::move(weights);
  c.inside_predicate = std::move(inside_predicate);
  c.center = c.reference_center();
  return c;
}

double min_node_separation(const Contour &contour, Complex z)
{
  double d = std::numeric_limits<double>::infinity();
  for (Complex node : contour.nodes)
  {
    d = std::min(d, std::abs(z - node));
  }
  return d;
}

void check_point_separation(const Contour &contour, Complex z)
{
  double d = min_node_separation(contour, z);
  if (d == 0.0)
  {
    throw PoleError(z, "evaluation point " + format_complex(z) +
                           " coincides with a quadrature node");
  }
  if (d < 1e-6 * contour.reference_radius())
  {
    std::cerr << "ceig: warning: point " << format_complex(z)
              << " is within 1e-6*radius of a quadrature node; results may be inaccurate\n";
  }
}

}  // namespace ceig

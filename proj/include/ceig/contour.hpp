// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_CONTOUR_HPP
#define CEIG_CONTOUR_HPP

#include <functional>
#include <vector>

#include "ceig/types.hpp"

namespace ceig
{

enum class ContourKind
{
  Circle,
  Ellipse,
  Custom
};

// Quadrature rule for (1/2πi)∮ f(z) dz over a closed contour. The weights
// absorb the 1/(2πi) factor and the contour derivative, so every integral
// downstream is the plain weighted sum Σ_k w_k f(ζ_k).
class Contour
{
public:
  ContourKind kind = ContourKind::Circle;
  Complex center = 0.0;
  double radius = 0.0;           // circle
  double semi_axis_re = 0.0;     // ellipse
  double semi_axis_im = 0.0;

  std::vector<Complex> nodes;
  std::vector<Complex> weights;

  // Membership test for custom contours (winding-number style predicate
  // supplied by the user). Unused for circle/ellipse.
  std::function<bool(Complex)> inside_predicate;

  int node_count() const { return static_cast<int>(nodes.size()); }

  /// Radius scale used for separation guards and default point placement:
  /// circle radius, largest ellipse semi-axis, or max node distance from
  /// the node centroid for custom contours.
  double reference_radius() const;

  /// Geometric center: stored center, or node centroid for custom contours.
  Complex reference_center() const;

  /// True if z lies in the closed contour region.
  bool contains(Complex z) const;

  /// True if z lies within rel_tol * reference_radius of the boundary.
  bool near_boundary(Complex z, double rel_tol = 1e-8) const;
};

/// Trapezoid rule on a circle: ζ_k = c + ρ e^{2πik/N}, w_k = ρ e^{2πik/N}/N,
/// k = 1..N.
Contour build_contour_circle(Complex center, double radius, int n_nodes);

/// Trapezoid rule on an axis-aligned ellipse with semi-axes (a, b).
Contour build_contour_ellipse(Complex center, double semi_axis_re, double semi_axis_im,
                              int n_nodes);

/// User-supplied nodes/weights (weights must already absorb 1/(2πi) dz).
Contour build_contour_custom(std::vector<Complex> nodes, std::vector<Complex> weights,
                             std::function<bool(Complex)> inside_predicate = nullptr);

/// Distance from z to the nearest quadrature node.
double min_node_separation(const Contour &contour, Complex z);

/// Throws PoleError if z coincides with a node; warns on stderr when the
/// separation is below 1e-6 * reference_radius (1/(z-ζ) amplifies noise).
void check_point_separation(const Contour &contour, Complex z);

}  // namespace ceig

#endif  // CEIG_CONTOUR_HPP

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_FILTERS_HPP
#define CEIG_FILTERS_HPP

#include <vector>

#include "ceig/contour.hpp"

namespace ceig
{

// Rational filter functions induced by a quadrature rule. They describe how
// the rule weights each eigenvalue's contribution to a sampled moment; the
// solvers never consume them, they are diagnostics.
struct FilterKind
{
  enum class Family
  {
    Hankel,   // b_k(z)   = Σ_j w_j ζ_j^k / (ζ_j - z)
    Loewner   // b_{σ,k}(z) = Σ_j w_j / ((ζ_j - z)(σ - ζ_j)^{k+1})
  };
  Family family = Family::Hankel;
  int order = 0;
  Complex sigma = 0.0;  // Loewner only
};

struct FilterProfile
{
  FilterKind kind;
  std::vector<Complex> grid;
  std::vector<Complex> values;
};

/// b_k(z) = Σ_j w_j ζ_j^k/(ζ_j - z); throws PoleError when z is a node.
Complex eval_hankel_filter(const Contour &rule, int order, Complex z);

/// b_{σ,k}(z) = Σ_j w_j/((ζ_j - z)(σ - ζ_j)^{k+1}).
Complex eval_loewner_filter(const Contour &rule, Complex sigma, int order, Complex z);

/// Unit-circle trapezoid closed form b_0(z) = 1/(1 - z^N).
Complex closed_form_b0_unit_circle(int n_nodes, Complex z);

FilterProfile filter_profile(const Contour &rule, const FilterKind &kind,
                             const std::vector<Complex> &grid);

}  // namespace ceig

#endif  // CEIG_FILTERS_HPP

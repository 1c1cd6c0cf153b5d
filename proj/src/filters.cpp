// SPDX-License-Identifier: Apache-2.0

#include "ceig/filters.hpp"

#include <cmath>

namespace ceig
{

namespace
{

void check_not_node(const Contour &rule, Complex z)
{
  for (Complex node : rule.nodes)
  {
    if (node == z)
    {
      throw PoleError(z, "filter evaluation point " + format_complex(z) +
                             " coincides with a quadrature node");
    }
  }
}

}  // namespace

Complex eval_hankel_filter(const Contour &rule, int order, Complex z)
{
  check_not_node(rule, z);
  Complex sum = 0.0;
  for (int j = 0; j < rule.node_count(); j++)
  {
    sum += rule.weights[j] * std::pow(rule.nodes[j], order) / (rule.nodes[j] - z);
  }
  return sum;
}

Complex eval_loewner_filter(const Contour &rule, Complex sigma, int order, Complex z)
{
  check_not_node(rule, z);
  check_not_node(rule, sigma);
  Complex sum = 0.0;
  for (int j = 0; j < rule.node_count(); j++)
  {
    sum += rule.weights[j] /
           ((rule.nodes[j] - z) * std::pow(sigma - rule.nodes[j], order + 1));
  }
  return sum;
}

Complex closed_form_b0_unit_circle(int n_nodes, Complex z)
{
  Complex zn = std::pow(z, n_nodes);
  if (zn == Complex(1.0))
  {
    throw PoleError(z, "z^N = 1: closed-form filter has a pole at z = " + format_complex(z));
  }
  return 1.0 / (1.0 - zn);
}

FilterProfile filter_profile(const Contour &rule, const FilterKind &kind,
                             const std::vector<Complex> &grid)
{
  FilterProfile profile;
  profile.kind = kind;
  profile.grid = grid;
  profile.values.reserve(grid.size());
  for (Complex z : grid)
  {
    profile.values.push_back(kind.family == FilterKind::Family::Hankel
                                 ? eval_hankel_filter(rule, kind.order, z)
                                 : eval_loewner_filter(rule, kind.sigma, kind.order, z));
  }
  return profile;
}

}  // namespace ceig

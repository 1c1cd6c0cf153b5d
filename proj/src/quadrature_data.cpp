// SPDX-License-Identifier: Apache-2.0

#include "ceig/quadrature_data.hpp"

#include <string>

namespace ceig
{

double QuadratureData::consistency_error() const
{
  double worst = 0.0;
  for (int k = 0; k < node_count(); k++)
  {
    Matrix lhs = probes.left.adjoint() * qr[k];
    Matrix rhs = ql[k] * probes.right;
    double scale = rhs.norm();
    worst = std::max(worst, (lhs - rhs).norm() / (scale > 0.0 ? scale : 1.0));
  }
  return worst;
}

namespace
{

struct NodeFailure
{
  int index = -1;
  std::string message;
};

// Evaluate one node; returns false (with diagnostics) instead of throwing so
// the caller can run nodes inside an OpenMP region.
bool eval_node(const NlevpProblem &problem, Complex node, const ProbingConfig &probes,
               Matrix &ql_out, Matrix &qr_out, std::string &error)
{
  try
  {
    qr_out = problem.solve(node, probes.right);
    ql_out = problem.solve_adjoint(node, probes.left).adjoint();
  }
  catch (const std::exception &e)
  {
    error = e.what();
    return false;
  }
  if (!qr_out.allFinite() || !ql_out.allFinite())
  {
    error = "non-finite resolvent entries";
    return false;
  }
  return true;
}

QuadratureData compute_impl(const NlevpProblem &problem, const Contour &contour,
                            const ProbingConfig &probes, bool parallel)
{
  if (probes.dim() != problem.dim())
  {
    throw std::invalid_argument("probing dimension does not match problem dimension");
  }
  const int n_nodes = contour.node_count();
  QuadratureData data;
  data.contour = contour;
  data.probes = probes;
  data.ql.resize(n_nodes);
  data.qr.resize(n_nodes);

  std::vector<NodeFailure> failures(n_nodes);

  if (parallel)
  {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_nodes; k++)
    {
      std::string err;
      if (!eval_node(problem, contour.nodes[k], probes, data.ql[k], data.qr[k], err))
      {
        failures[k] = {k, err};
      }
    }
  }
  else
  {
    for (int k = 0; k < n_nodes; k++)
    {
      std::string err;
      if (!eval_node(problem, contour.nodes[k], probes, data.ql[k], data.qr[k], err))
      {
        failures[k] = {k, err};
      }
    }
  }

  for (const NodeFailure &f : failures)
  {
    if (f.index >= 0)
    {
      throw NodeSingularError(
          f.index, contour.nodes[f.index],
          "T(z) is singular at quadrature node " + std::to_string(f.index + 1) + " of " +
              std::to_string(n_nodes) + ", z = " + format_complex(contour.nodes[f.index]) +
              " (" + f.message + "); the contour passes through an eigenvalue");
    }
  }
  return data;
}

}  // namespace

QuadratureData compute_quadrature_data(const NlevpProblem &problem, const Contour &contour,
                                       const ProbingConfig &probes)
{
  return compute_impl(problem, contour, probes, true);
}

QuadratureData compute_quadrature_data_serial(const NlevpProblem &problem,
                                              const Contour &contour,
                                              const ProbingConfig &probes)
{
  return compute_impl(problem, contour, probes, false);
}

}  // namespace ceig

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_QUADRATURE_DATA_HPP
#define CEIG_QUADRATURE_DATA_HPP

#include <vector>

#include "ceig/contour.hpp"
#include "ceig/probing.hpp"
#include "ceig/problem.hpp"

namespace ceig
{

// Per-node probed resolvent slabs:
//   ql[k] = L^* T(ζ_k)^{-1}  (ℓ×n),   qr[k] = T(ζ_k)^{-1} R  (n×r).
// Every sampler downstream is a weighted sum over these slabs, so the linear
// solves are done once per node regardless of how many moments, points, or
// methods consume them.
struct QuadratureData
{
  std::vector<Matrix> ql;
  std::vector<Matrix> qr;
  Contour contour;
  ProbingConfig probes;

  int node_count() const { return static_cast<int>(ql.size()); }
  int dim() const { return probes.dim(); }
  int left_count() const { return probes.left_count(); }
  int right_count() const { return probes.right_count(); }

  /// max_k ‖L^* qr[k] - ql[k] R‖_F / ‖ql[k] R‖_F; both sides sample
  /// L^* T(ζ_k)^{-1} R, so this should sit at working precision.
  double consistency_error() const;
};

/// Node evaluations run in parallel (OpenMP when enabled); slabs are written
/// to disjoint storage so the result is identical to the serial reference.
QuadratureData compute_quadrature_data(const NlevpProblem &problem, const Contour &contour,
                                       const ProbingConfig &probes);

/// Serial reference implementation, kept for testing and benchmarking.
QuadratureData compute_quadrature_data_serial(const NlevpProblem &problem,
                                              const Contour &contour,
                                              const ProbingConfig &probes);

}  // namespace ceig

#endif  // CEIG_QUADRATURE_DATA_HPP

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_LOEWNER_SINGLE_HPP
#define CEIG_LOEWNER_SINGLE_HPP

#include "ceig/eigensolution.hpp"
#include "ceig/hankel.hpp"
#include "ceig/moments.hpp"

namespace ceig
{

// Loewner and shifted Loewner matrices for a single expansion point σ,
// assembled from Hankel-in-moments block layouts: lmat has blocks
// L^*M_{i+j+1}R and l0 has blocks L^*M_{i+j}R, i, j = 0..K-1, with
// ls = σ·lmat + l0 holding exactly by construction.
struct SinglePointPencil
{
  Complex sigma = 0.0;
  Matrix lmat;  // ℓK × rK
  Matrix l0;    // ℓK × rK
  Matrix ls;    // ℓK × rK
  OneSidedData one_sided;
  int block_count = 0;
  int left_count = 0;
  int right_count = 0;
};

/// Requires σ-moments of orders 0..2K-1.
SinglePointPencil build_single_point_pencil(const MomentSet &moments, int block_count);

/// SVD-truncates lmat, forms B_σ = Σ^{-1} X^* ls Y (note Σ^{-1} on the left,
/// unlike the Hankel projection), diagonalizes, and recovers right
/// eigenvectors as cdata·Y·s_j.
EigenSolution solve_single_point(const SinglePointPencil &pencil, const RankPolicy &policy,
                                 bool want_left_eigenvectors = false);

SingularValueReport singular_value_report(const SinglePointPencil &pencil,
                                          const RankPolicy &policy);

/// Deterministic default expansion point: center + (4/3)·radius along the
/// positive real axis of the contour.
Complex default_sigma(const Contour &contour);

}  // namespace ceig

#endif  // CEIG_LOEWNER_SINGLE_HPP

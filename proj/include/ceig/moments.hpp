// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_MOMENTS_HPP
#define CEIG_MOMENTS_HPP

#include <vector>

#include "ceig/quadrature_data.hpp"

namespace ceig
{

// Probed moment samples of the transfer function H(z) around a single
// expansion point. At infinity the k-th block samples the Markov parameter
// M_k = V Λ^k W^*; at a finite σ it samples the Taylor coefficient
// M_k = H^{(k)}(σ)/k! = (-1)^k V(σI-Λ)^{-(k+1)}W^*. The finite-σ blocks
// store M_k itself (the theorem's (-1)^k already folded in), so Loewner
// assembly can use them verbatim.
struct MomentSet
{
  bool at_infinity = true;
  Complex sigma = 0.0;
  int order_max = 0;  // blocks hold orders 0..order_max

  std::vector<Matrix> left_blocks;   // ℓ×n, L^* M_k
  std::vector<Matrix> right_blocks;  // n×r, M_k R
  std::vector<Matrix> two_sided;     // ℓ×r, L^* M_k R

  int order_count() const { return static_cast<int>(two_sided.size()); }

  /// max_k rel. deviation between L^*·right_blocks[k] and two_sided[k].
  double probing_consistency_error(const ProbingConfig &probes) const;
};

/// Markov parameters: two_sided[k] = Σ_j w_j ζ_j^k · ql[j]·R, with the
/// one-sided blocks using the unprobed sides of the tensors.
MomentSet markov_moments(const QuadratureData &data, int order_max);

/// Moments of H at σ outside the closed region:
/// two_sided[k] = (-1)^k Σ_j w_j (σ-ζ_j)^{-(k+1)} ql[j]·R.
MomentSet sigma_moments(const QuadratureData &data, Complex sigma, int order_max);

enum class SampleSide
{
  Left,
  Right
};

/// One tangential sample of H: a row ℓ_i^* H(point) (Left) or a column
/// H(point) r_j (Right), point outside the closed region.
Vector point_sample(const QuadratureData &data, Complex point, SampleSide side,
                    int direction_index);

/// Tangential derivative ℓ_i^* H'(σ) r_j = Σ_k -w_k (σ-ζ_k)^{-2} ℓ_i^*T(ζ_k)^{-1}r_j.
Complex hermite_sample(const QuadratureData &data, Complex sigma, int left_index,
                       int right_index);

/// For σ strictly inside the region (not an eigenvalue): the weighted sum
/// Σ_j w_j (σ-ζ_j)^{-(k+1)} ql[j]·R, which equals (-1)^{k+1} L^*N^{(k)}(σ)R / k!.
/// Combine with L^*T(σ)^{-1}R to sample H inside the contour.
Matrix interior_remainder_sample(const QuadratureData &data, Complex sigma, int order);

}  // namespace ceig

#endif  // CEIG_MOMENTS_HPP

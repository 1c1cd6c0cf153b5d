// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_PROBING_HPP
#define CEIG_PROBING_HPP

#include <cstdint>

#include "ceig/types.hpp"

namespace ceig
{

/// Left and right probing matrices L (n×ℓ) and R (n×r).
struct ProbingConfig
{
  Matrix left;
  Matrix right;
  std::uint64_t seed = 0;

  int left_count() const { return static_cast<int>(left.cols()); }
  int right_count() const { return static_cast<int>(right.cols()); }
  int dim() const { return static_cast<int>(left.rows()); }
};

/// Matrix of i.i.d. standard complex Gaussian entries, fully determined by
/// the seed. Uses Box-Muller over mt19937_64 draws so the stream does not
/// depend on the standard library's distribution internals.
Matrix complex_gaussian(int rows, int cols, std::uint64_t seed);

/// Random probes with ℓ left and r right directions (seed 0 by default).
ProbingConfig make_gaussian_probes(int dim, int n_left, int n_right, std::uint64_t seed = 0);

/// Probes from explicit matrices; validates shapes and nonzero columns.
ProbingConfig make_probes(Matrix left, Matrix right);

}  // namespace ceig

#endif  // CEIG_PROBING_HPP

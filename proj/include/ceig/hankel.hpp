// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_HANKEL_HPP
#define CEIG_HANKEL_HPP

#include "ceig/eigensolution.hpp"
#include "ceig/moments.hpp"
#include "ceig/svd_rank.hpp"

namespace ceig
{

// Block Hankel pair built from Markov-parameter samples A_0..A_{2K-1}:
// h has blocks A_{i+j}, hs has blocks A_{i+j+1} (i, j = 0..K-1), so K = 1
// reduces to (A_0, A_1).
struct BlockHankelPair
{
  Matrix h;   // ℓK × rK
  Matrix hs;  // ℓK × rK
  int block_count = 0;   // K
  int left_count = 0;    // ℓ
  int right_count = 0;   // r
};

// One-sided Markov data: bdata stacks L^*M_0..L^*M_{K-1} (ℓK×n), cdata
// concatenates M_0R..M_{K-1}R (n×rK). These recover eigenvectors that the
// two-sided samples obscure.
struct OneSidedData
{
  Matrix bdata;
  Matrix cdata;
};

/// Assembles the pair and one-sided data from moments at infinity; the
/// moment set must contain orders 0..2K-1.
std::pair<BlockHankelPair, OneSidedData> build_hankel(const MomentSet &moments, int block_count);

/// SVD-truncates h, forms B = X^* hs Y Σ^{-1}, diagonalizes B = SΛS^{-1}.
/// Right eigenvectors are columns of cdata·Y·Σ^{-1}·S; left eigenvectors
/// (optional) are conjugated rows of S^{-1}X^*·bdata. Residual fields are
/// left empty; fill them with residual_report against the problem.
EigenSolution solve_hankel(const BlockHankelPair &pair, const OneSidedData &one_sided,
                           const RankPolicy &policy, bool want_left_eigenvectors = false);

SingularValueReport singular_value_report(const BlockHankelPair &pair,
                                          const RankPolicy &policy);

}  // namespace ceig

#endif  // CEIG_HANKEL_HPP

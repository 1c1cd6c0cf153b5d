// SPDX-License-Identifier: Apache-2.0

#include "ceig/hankel.hpp"

#include "pencil_detail.hpp"

namespace ceig
{

std::pair<BlockHankelPair, OneSidedData> build_hankel(const MomentSet &moments,
                                                      int block_count)
{
  if (!moments.at_infinity)
  {
    throw std::invalid_argument("Hankel assembly requires moments at infinity");
  }
  if (block_count < 1)
  {
    throw std::invalid_argument("block count must be at least 1");
  }
  if (moments.order_count() < 2 * block_count)
  {
    throw std::invalid_argument("Hankel assembly needs moment orders 0.." +
                                std::to_string(2 * block_count - 1) + ", got only " +
                                std::to_string(moments.order_count()));
  }

  BlockHankelPair pair;
  pair.block_count = block_count;
  pair.left_count = static_cast<int>(moments.two_sided[0].rows());
  pair.right_count = static_cast<int>(moments.two_sided[0].cols());
  pair.h = detail::block_matrix(moments.two_sided, block_count, 0);
  pair.hs = detail::block_matrix(moments.two_sided, block_count, 1);

  OneSidedData sides;
  const int n = static_cast<int>(moments.left_blocks[0].cols());
  sides.bdata.resize(pair.left_count * block_count, n);
  sides.cdata.resize(n, pair.right_count * block_count);
  for (int i = 0; i < block_count; i++)
  {
    sides.bdata.middleRows(i * pair.left_count, pair.left_count) = moments.left_blocks[i];
    sides.cdata.middleCols(i * pair.right_count, pair.right_count) = moments.right_blocks[i];
  }
  return {std::move(pair), std::move(sides)};
}

EigenSolution solve_hankel(const BlockHankelPair &pair, const OneSidedData &one_sided,
                           const RankPolicy &policy, bool want_left_eigenvectors)
{
  if (pair.h.norm() == 0.0)
  {
    throw std::invalid_argument("Hankel matrix is identically zero");
  }
  TruncatedSvd svd = truncated_svd(pair.h, policy);

  EigenSolution solution;
  solution.method = "hankel";
  solution.singular_values = svd.full_spectrum;
  solution.rank_used = svd.rank;
  if (svd.rank == 0)
  {
    // All singular values below the floor: no eigenvalues detected.
    solution.right_eigenvectors.resize(one_sided.cdata.rows(), 0);
    return solution;
  }

  Matrix b = svd.u.adjoint() * pair.hs * svd.v *
             svd.singular_values.cwiseInverse().asDiagonal();
  detail::SortedEig eig = detail::sorted_eig(b);
  solution.eigenvalues = eig.values;
  solution.eigenvector_cond = condition_number(eig.vectors);
  solution.defective_warning = solution.eigenvector_cond > detail::kDefectiveCondThreshold;

  Matrix recovery = one_sided.cdata * svd.v *
                    svd.singular_values.cwiseInverse().asDiagonal() * eig.vectors;
  solution.right_eigenvectors = recovery;
  for (int j = 0; j < recovery.cols(); j++)
  {
    double norm = solution.right_eigenvectors.col(j).norm();
    if (norm > 0.0)
    {
      solution.right_eigenvectors.col(j) /= norm;
    }
  }

  if (want_left_eigenvectors)
  {
    // Rows of S^{-1} X^* bdata are left eigenvectors (conjugated to columns).
    Matrix left_rows = eig.vectors.partialPivLu().solve(svd.u.adjoint() * one_sided.bdata);
    solution.left_eigenvectors = left_rows.adjoint();
    for (int j = 0; j < solution.left_eigenvectors.cols(); j++)
    {
      double norm = solution.left_eigenvectors.col(j).norm();
      if (norm > 0.0)
      {
        solution.left_eigenvectors.col(j) /= norm;
      }
    }
  }
  return solution;
}

SingularValueReport singular_value_report(const BlockHankelPair &pair,
                                          const RankPolicy &policy)
{
  return make_singular_value_report(pair.h, policy);
}

}  // namespace ceig

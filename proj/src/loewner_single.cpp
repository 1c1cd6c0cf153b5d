// SPDX-License-Identifier: Apache-2.0

#include "ceig/loewner_single.hpp"

#include "pencil_detail.hpp"

namespace ceig
{

SinglePointPencil build_single_point_pencil(const MomentSet &moments, int block_count)
{
  if (moments.at_infinity)
  {
    throw std::invalid_argument("single-point Loewner assembly requires σ-moments");
  }
  if (block_count < 1)
  {
    throw std::invalid_argument("block count must be at least 1");
  }
  if (moments.order_count() < 2 * block_count)
  {
    throw std::invalid_argument("Loewner assembly needs moment orders 0.." +
                                std::to_string(2 * block_count - 1) + ", got only " +
                                std::to_string(moments.order_count()));
  }

  SinglePointPencil pencil;
  pencil.sigma = moments.sigma;
  pencil.block_count = block_count;
  pencil.left_count = static_cast<int>(moments.two_sided[0].rows());
  pencil.right_count = static_cast<int>(moments.two_sided[0].cols());
  pencil.lmat = detail::block_matrix(moments.two_sided, block_count, 1);
  pencil.l0 = detail::block_matrix(moments.two_sided, block_count, 0);
  pencil.ls = moments.sigma * pencil.lmat + pencil.l0;

  const int n = static_cast<int>(moments.left_blocks[0].cols());
  pencil.one_sided.bdata.resize(pencil.left_count * block_count, n);
  pencil.one_sided.cdata.resize(n, pencil.right_count * block_count);
  for (int i = 0; i < block_count; i++)
  {
    pencil.one_sided.bdata.middleRows(i * pencil.left_count, pencil.left_count) =
        moments.left_blocks[i];
    pencil.one_sided.cdata.middleCols(i * pencil.right_count, pencil.right_count) =
        moments.right_blocks[i];
  }
  return pencil;
}

EigenSolution solve_single_point(const SinglePointPencil &pencil, const RankPolicy &policy,
                                 bool want_left_eigenvectors)
{
  if (pencil.lmat.norm() == 0.0)
  {
    throw std::invalid_argument("Loewner matrix is identically zero");
  }
  TruncatedSvd svd = truncated_svd(pencil.lmat, policy);

  EigenSolution solution;
  solution.method = "loewner1";
  solution.singular_values = svd.full_spectrum;
  solution.rank_used = svd.rank;
  if (svd.rank == 0)
  {
    solution.right_eigenvectors.resize(pencil.one_sided.cdata.rows(), 0);
    return solution;
  }

  // B_σ = Σ^{-1} X^* ls Y; the projection order is part of the contract.
  Matrix b = svd.singular_values.cwiseInverse().asDiagonal() *
             (svd.u.adjoint() * pencil.ls * svd.v);
  detail::SortedEig eig = detail::sorted_eig(b);
  solution.eigenvalues = eig.values;
  solution.eigenvector_cond = condition_number(eig.vectors);
  solution.defective_warning = solution.eigenvector_cond > detail::kDefectiveCondThreshold;

  solution.right_eigenvectors = pencil.one_sided.cdata * svd.v * eig.vectors;
  for (int j = 0; j < solution.right_eigenvectors.cols(); j++)
  {
    double norm = solution.right_eigenvectors.col(j).norm();
    if (norm > 0.0)
    {
      solution.right_eigenvectors.col(j) /= norm;
    }
  }

  if (want_left_eigenvectors)
  {
    // H(z) = cdata·Y·S (Λ - zI)^{-1} S^{-1}Σ^{-1}X^*·bdata up to sign, so the
    // conjugated rows of S^{-1}Σ^{-1}X^*·bdata act as left eigenvectors.
    Matrix left_rows = eig.vectors.partialPivLu().solve(
        svd.singular_values.cwiseInverse().asDiagonal() *
        (svd.u.adjoint() * pencil.one_sided.bdata));
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

SingularValueReport singular_value_report(const SinglePointPencil &pencil,
                                          const RankPolicy &policy)
{
  return make_singular_value_report(pencil.lmat, policy);
}

Complex default_sigma(const Contour &contour)
{
  return contour.reference_center() + Complex(4.0 / 3.0 * contour.reference_radius(), 0.0);
}

}  // namespace ceig

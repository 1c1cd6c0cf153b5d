// SPDX-License-Identifier: Apache-2.0

#include "pencil_detail.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace ceig::detail
{

// Eigenvector condition number beyond which the projected matrix is flagged
// as numerically defective.
const double kDefectiveCondThreshold = 1e10;

Matrix block_matrix(const std::vector<Matrix> &blocks, int block_count, int offset)
{
  const int rows = static_cast<int>(blocks[0].rows());
  const int cols = static_cast<int>(blocks[0].cols());
  Matrix out(rows * block_count, cols * block_count);
  for (int i = 0; i < block_count; i++)
  {
    for (int j = 0; j < block_count; j++)
    {
      out.block(i * rows, j * cols, rows, cols) = blocks[i + j + offset];
    }
  }
  return out;
}

SortedEig sorted_eig(const Matrix &b)
{
  Eigen::ComplexEigenSolver<Matrix> eig(b);
  if (eig.info() != Eigen::Success)
  {
    throw std::runtime_error("dense eigensolver failed on the projected matrix");
  }
  const int m = static_cast<int>(b.rows());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    Complex za = eig.eigenvalues()(a), zc = eig.eigenvalues()(c);
    if (za.real() != zc.real())
    {
      return za.real() < zc.real();
    }
    return za.imag() < zc.imag();
  });
  SortedEig out;
  out.values.resize(m);
  out.vectors.resize(m, m);
  for (int i = 0; i < m; i++)
  {
    out.values[i] = eig.eigenvalues()(order[i]);
    out.vectors.col(i) = eig.eigenvectors().col(order[i]);
  }
  return out;
}

}  // namespace ceig::detail

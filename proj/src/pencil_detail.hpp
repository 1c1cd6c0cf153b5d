// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_SRC_PENCIL_DETAIL_HPP
#define CEIG_SRC_PENCIL_DETAIL_HPP

#include <vector>

#include "ceig/types.hpp"

namespace ceig::detail
{

extern const double kDefectiveCondThreshold;

/// K×K block matrix with block (i,j) = blocks[i+j+offset].
Matrix block_matrix(const std::vector<Matrix> &blocks, int block_count, int offset);

struct SortedEig
{
  std::vector<Complex> values;
  Matrix vectors;  // columns ordered consistently with values
};

/// Dense nonsymmetric eigendecomposition, eigenvalues sorted by ascending
/// real part (imaginary part breaks ties) for reproducible output.
SortedEig sorted_eig(const Matrix &b);

}  // namespace ceig::detail

#endif  // CEIG_SRC_PENCIL_DETAIL_HPP

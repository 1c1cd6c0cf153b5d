// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_LAPACK_HPP
#define CEIG_LAPACK_HPP

#include <vector>

#include "ceig/types.hpp"

namespace ceig
{

// Generalized eigendecomposition of the pencil (A, E): A x = λ E x, computed
// without inverting E (Loewner pencils are routinely singular). Eigenvalues
// come back as (alpha, beta) pairs with λ = alpha/beta; beta ≈ 0 marks an
// infinite eigenvalue.
struct GeneralizedEig
{
  std::vector<Complex> alphas;
  std::vector<Complex> betas;
  Matrix right_vectors;

  bool is_finite(int j, double tol = 1e-12) const;
  Complex eigenvalue(int j) const { return alphas[j] / betas[j]; }
};

/// Eigen has no complex-valued generalized eigensolver, so this calls
/// LAPACK's zggev directly.
GeneralizedEig generalized_eig(const Matrix &a, const Matrix &e);

}  // namespace ceig

#endif  // CEIG_LAPACK_HPP

// SPDX-License-Identifier: Apache-2.0

#include "ceig/lapack.hpp"

extern "C"
{
  void zggev_(char *jobvl, char *jobvr, int *n, std::complex<double> *a, int *lda,
              std::complex<double> *b, int *ldb, std::complex<double> *alpha,
              std::complex<double> *beta, std::complex<double> *vl, int *ldvl,
              std::complex<double> *vr, int *ldvr, std::complex<double> *work, int *lwork,
              double *rwork, int *info);
}

namespace ceig
{

bool GeneralizedEig::is_finite(int j, double tol) const
{
  return std::abs(betas[j]) > tol * (std::abs(alphas[j]) + std::abs(betas[j]));
}

GeneralizedEig generalized_eig(const Matrix &a, const Matrix &e)
{
  if (a.rows() != a.cols() || e.rows() != e.cols() || a.rows() != e.rows())
  {
    throw std::invalid_argument("generalized_eig requires square matrices of equal size");
  }
  int n = static_cast<int>(a.rows());
  GeneralizedEig out;
  out.alphas.resize(n);
  out.betas.resize(n);
  out.right_vectors.resize(n, n);
  if (n == 0)
  {
    return out;
  }

  Matrix awork = a;  // zggev overwrites its inputs
  Matrix ework = e;
  char jobvl = 'N', jobvr = 'V';
  int lda = n, ldb = n, ldvl = 1, ldvr = n, info = 0;
  std::vector<double> rwork(8 * n);
  Complex wkopt;
  int lwork = -1;
  zggev_(&jobvl, &jobvr, &n, awork.data(), &lda, ework.data(), &ldb, out.alphas.data(),
         out.betas.data(), nullptr, &ldvl, out.right_vectors.data(), &ldvr, &wkopt, &lwork,
         rwork.data(), &info);
  lwork = static_cast<int>(wkopt.real());
  std::vector<Complex> work(lwork);
  zggev_(&jobvl, &jobvr, &n, awork.data(), &lda, ework.data(), &ldb, out.alphas.data(),
         out.betas.data(), nullptr, &ldvl, out.right_vectors.data(), &ldvr, work.data(),
         &lwork, rwork.data(), &info);
  if (info != 0)
  {
    throw std::runtime_error("zggev failed with info = " + std::to_string(info));
  }
  return out;
}

}  // namespace ceig

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_SVD_RANK_HPP
#define CEIG_SVD_RANK_HPP

#include <optional>
#include <vector>

#include "ceig/types.hpp"

namespace ceig
{

// Numerical-rank rule for the SVD truncation step shared by the Hankel and
// Loewner pencils: m̂ = largest k with σ_k ≥ max(rel_tol·σ₁, abs_floor), or a
// user-forced rank. rel_tol 1e-10 suits exact-data runs; around 1e-8 is a
// sensible starting point for quadrature data.
struct RankPolicy
{
  double rel_tol = 1e-10;
  double abs_floor = 1e-12;
  std::optional<int> forced_rank;
};

struct TruncatedSvd
{
  Matrix u;                          // ·×m̂, orthonormal columns
  Matrix v;                          // ·×m̂, orthonormal columns
  RealVector singular_values;        // leading m̂ values
  std::vector<double> full_spectrum; // all singular values, descending
  int rank = 0;
};

TruncatedSvd truncated_svd(const Matrix &a, const RankPolicy &policy);

int select_rank(const std::vector<double> &singular_values, const RankPolicy &policy);

struct SingularValueReport
{
  std::vector<double> values;      // σ₁ ≥ σ₂ ≥ ...
  std::vector<double> gap_ratios;  // σ_{k+1}/σ_k
  int suggested_rank = 0;
};

SingularValueReport make_singular_value_report(const Matrix &a, const RankPolicy &policy);

/// Condition number via SVD; infinity when singular.
double condition_number(const Matrix &a);

}  // namespace ceig

#endif  // CEIG_SVD_RANK_HPP

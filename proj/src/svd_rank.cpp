// SPDX-License-Identifier: Apache-2.0

#include "ceig/svd_rank.hpp"

#include <limits>

namespace ceig
{

int select_rank(const std::vector<double> &singular_values, const RankPolicy &policy)
{
  const int count = static_cast<int>(singular_values.size());
  if (policy.forced_rank)
  {
    if (*policy.forced_rank < 0 || *policy.forced_rank > count)
    {
      throw std::invalid_argument("forced rank out of range");
    }
    return *policy.forced_rank;
  }
  if (count == 0)
  {
    return 0;
  }
  double cutoff = std::max(policy.rel_tol * singular_values[0], policy.abs_floor);
  int rank = 0;
  while (rank < count && singular_values[rank] >= cutoff)
  {
    rank++;
  }
  return rank;
}

TruncatedSvd truncated_svd(const Matrix &a, const RankPolicy &policy)
{
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  TruncatedSvd out;
  const auto &sv = svd.singularValues();
  out.full_spectrum.assign(sv.data(), sv.data() + sv.size());
  out.rank = select_rank(out.full_spectrum, policy);
  out.u = svd.matrixU().leftCols(out.rank);
  out.v = svd.matrixV().leftCols(out.rank);
  out.singular_values = sv.head(out.rank);
  return out;
}

SingularValueReport make_singular_value_report(const Matrix &a, const RankPolicy &policy)
{
  Eigen::JacobiSVD<Matrix> svd(a);
  SingularValueReport report;
  const auto &sv = svd.singularValues();
  report.values.assign(sv.data(), sv.data() + sv.size());
  for (std::size_t k = 0; k + 1 < report.values.size(); k++)
  {
    report.gap_ratios.push_back(report.values[k] > 0.0
                                    ? report.values[k + 1] / report.values[k]
                                    : 0.0);
  }
  report.suggested_rank = select_rank(report.values, policy);
  return report;
}

double condition_number(const Matrix &a)
{
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto &sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0)
  {
    return std::numeric_limits<double>::infinity();
  }
  return sv(0) / sv(sv.size() - 1);
}

}  // namespace ceig

// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ceig/hankel.hpp"
#include "ceig/problems/delay.hpp"
#include "test_helpers.hpp"

using namespace ceig;

namespace
{

MomentSet exact_markov_set(const problems::PlantedProblem &problem,
                           const ProbingConfig &probes, int order_max)
{
  MomentSet set;
  set.at_infinity = true;
  set.order_max = order_max;
  for (int k = 0; k <= order_max; k++)
  {
    Matrix mk = problem.markov_moment(k);
    set.left_blocks.push_back(probes.left.adjoint() * mk);
    set.right_blocks.push_back(mk * probes.right);
    set.two_sided.push_back(probes.left.adjoint() * mk * probes.right);
  }
  return set;
}

MomentSet scalar_markov_set(Complex lambda0, int order_max)
{
  MomentSet set;
  set.at_infinity = true;
  set.order_max = order_max;
  for (int k = 0; k <= order_max; k++)
  {
    Matrix m(1, 1);
    m(0, 0) = std::pow(lambda0, k);
    set.left_blocks.push_back(m);
    set.right_blocks.push_back(m);
    set.two_sided.push_back(m);
  }
  return set;
}

}  // namespace

TEST_CASE("scalar block Hankel layout for K=2")
{
  MomentSet moments = scalar_markov_set(0.3, 3);
  auto [pair, sides] = build_hankel(moments, 2);
  Matrix h_expect(2, 2), hs_expect(2, 2);
  h_expect << 1.0, 0.3, 0.3, 0.09;
  hs_expect << 0.3, 0.09, 0.09, 0.027;
  CHECK((pair.h - h_expect).norm() < 1e-15);
  CHECK((pair.hs - hs_expect).norm() < 1e-15);
}

TEST_CASE("K=1 reduces to (A0, A1)")
{
  MomentSet moments = scalar_markov_set(0.3, 1);
  auto [pair, sides] = build_hankel(moments, 1);
  CHECK(pair.h(0, 0) == moments.two_sided[0](0, 0));
  CHECK(pair.hs(0, 0) == moments.two_sided[1](0, 0));
}

TEST_CASE("Hankel structure holds exactly by construction")
{
  problems::PlantedSpec spec;
  spec.dim = 9;
  spec.eigenvalues = {Complex(0.5, 0.0), Complex(-0.1, 0.4), Complex(-0.3, -0.2)};
  spec.seed = 2;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(9, 2, 2, 3);
  MomentSet moments = exact_markov_set(problem, probes, 5);
  auto [pair, sides] = build_hankel(moments, 3);
  const int l = 2, r = 2;
  for (int i = 0; i < 3; i++)
  {
    for (int j = 0; j < 3; j++)
    {
      for (int i2 = 0; i2 < 3; i2++)
      {
        for (int j2 = 0; j2 < 3; j2++)
        {
          if (i + j == i2 + j2)
          {
            CHECK(pair.h.block(i * l, j * r, l, r) == pair.h.block(i2 * l, j2 * r, l, r));
          }
        }
      }
    }
  }
}

TEST_CASE("insufficient moment order is rejected")
{
  MomentSet moments = scalar_markov_set(0.3, 2);  // orders 0..2, need 0..3 for K=2
  CHECK_THROWS_AS(build_hankel(moments, 2), std::invalid_argument);
}

TEST_CASE("planted m=3 has Hankel rank 3 with exact moments")
{
  problems::PlantedSpec spec;
  spec.dim = 10;
  spec.eigenvalues = {Complex(0.5, 0.0), Complex(-0.1, 0.4), Complex(-0.3, -0.2)};
  spec.seed = 41;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(10, 1, 1, 7);  // single probe, K must carry rank
  MomentSet moments = exact_markov_set(problem, probes, 5);
  auto [pair, sides] = build_hankel(moments, 3);
  SingularValueReport report = singular_value_report(pair, RankPolicy{1e-10, 1e-13, {}});
  CHECK(report.suggested_rank == 3);

  // oracle: H = O R from the planted factors
  Matrix obs = problem.hankel_observability(probes.left, 3);
  Matrix reach = problem.hankel_reachability(probes.right, 3);
  CHECK((pair.h - obs * reach).norm() < 1e-12 * pair.h.norm());
  CHECK((pair.hs - obs * Vector::Map(spec.eigenvalues.data(), 3).asDiagonal() * reach)
            .norm() < 1e-12 * pair.hs.norm());
}

TEST_CASE("scalar exact data: eigenvalue 0.3, eigenvector [1]")
{
  MomentSet moments = scalar_markov_set(0.3, 3);
  auto [pair, sides] = build_hankel(moments, 2);
  EigenSolution solution = solve_hankel(pair, sides, RankPolicy{});
  REQUIRE(solution.rank_used == 1);
  REQUIRE(solution.eigenvalues.size() == 1);
  CHECK(std::abs(solution.eigenvalues[0] - 0.3) < 1e-12);
  CHECK(std::abs(std::abs(solution.right_eigenvectors(0, 0)) - 1.0) < 1e-12);
  CHECK(solution.singular_values.size() == 2);
  CHECK(solution.singular_values[1] / solution.singular_values[0] < 1e-14);
}

TEST_CASE("diag(z-1, z-3) on circle(0,2): eigenvalue 1 with eigenvector e1")
{
  auto problem = ceig::testing::diag_linear({1.0, 3.0});
  Contour contour = build_contour_circle(0.0, 2.0, 128);
  ProbingConfig probes = make_probes(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  QuadratureData data = compute_quadrature_data(problem, contour, probes);
  auto [pair, sides] = build_hankel(markov_moments(data, 1), 1);
  EigenSolution solution = solve_hankel(pair, sides, RankPolicy{1e-8, 1e-10, {}});
  REQUIRE(solution.eigenvalues.size() == 1);
  CHECK(std::abs(solution.eigenvalues[0] - 1.0) < 1e-9);
  Vector e1(2);
  e1 << 1.0, 0.0;
  CHECK(ceig::testing::collinearity(solution.right_eigenvectors.col(0), e1) > 1.0 - 1e-9);
}

TEST_CASE("exact recovery on planted problems with K=1 and full probing")
{
  problems::PlantedSpec spec;
  spec.dim = 12;
  spec.eigenvalues = {Complex(0.5, 0.1), Complex(-0.4, 0.3), Complex(0.2, -0.5),
                      Complex(-0.1, -0.1)};
  spec.seed = 51;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(12, 4, 4, 9);
  MomentSet moments = exact_markov_set(problem, probes, 1);
  auto [pair, sides] = build_hankel(moments, 1);
  EigenSolution solution = solve_hankel(pair, sides, RankPolicy{}, true);
  REQUIRE(solution.eigenvalues.size() == 4);
  CHECK(ceig::testing::max_match_error(solution.eigenvalues, spec.eigenvalues) < 1e-10);

  for (int j = 0; j < 4; j++)
  {
    // match each recovered eigenvector to its planted counterpart
    int best = 0;
    double bestd = 1e300;
    for (int i = 0; i < 4; i++)
    {
      double d = std::abs(solution.eigenvalues[j] - spec.eigenvalues[i]);
      if (d < bestd)
      {
        bestd = d;
        best = i;
      }
    }
    CHECK(ceig::testing::collinearity(solution.right_eigenvectors.col(j),
                                      problem.planted_v().col(best)) > 1.0 - 1e-8);
    CHECK(ceig::testing::collinearity(solution.left_eigenvectors.col(j),
                                      problem.planted_w().col(best)) > 1.0 - 1e-8);
  }
}

TEST_CASE("linearly dependent eigenvectors need K > 1")
{
  problems::PlantedSpec spec;
  spec.dim = 10;
  spec.eigenvalues = {Complex(0.5, 0.0), Complex(-0.2, 0.4), Complex(-0.4, -0.3)};
  spec.v_rank = 2;
  spec.seed = 61;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(10, 2, 2, 11);

  MomentSet m1 = exact_markov_set(problem, probes, 1);
  auto [pair1, sides1] = build_hankel(m1, 1);
  CHECK(make_singular_value_report(pair1.h, RankPolicy{1e-10, 1e-13, {}}).suggested_rank ==
        2);

  MomentSet m2 = exact_markov_set(problem, probes, 3);
  auto [pair2, sides2] = build_hankel(m2, 2);
  EigenSolution solution = solve_hankel(pair2, sides2, RankPolicy{1e-10, 1e-13, {}});
  REQUIRE(solution.rank_used == 3);
  CHECK(ceig::testing::max_match_error(solution.eigenvalues, spec.eigenvalues) < 1e-10);
}

TEST_CASE("eigenvalues are invariant under a permuted SVD")
{
  problems::PlantedSpec spec;
  spec.dim = 8;
  spec.eigenvalues = {Complex(0.6, 0.0), Complex(-0.2, 0.2), Complex(0.1, -0.4)};
  spec.seed = 71;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(8, 3, 3, 13);
  MomentSet moments = exact_markov_set(problem, probes, 1);
  auto [pair, sides] = build_hankel(moments, 1);

  TruncatedSvd svd = truncated_svd(pair.h, RankPolicy{});
  REQUIRE(svd.rank == 3);
  Matrix b_ref = svd.u.adjoint() * pair.hs * svd.v *
                 svd.singular_values.cwiseInverse().asDiagonal();

  // permute the SVD triplet consistently: X -> XP, Y -> YP, Σ -> P^TΣP
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(3);
  perm.indices() << 2, 0, 1;
  Matrix xp = svd.u * perm;
  Matrix yp = svd.v * perm;
  RealVector sp = perm.transpose() * svd.singular_values;
  Matrix b_perm = xp.adjoint() * pair.hs * yp * sp.cwiseInverse().asDiagonal();

  Eigen::ComplexEigenSolver<Matrix> e1(b_ref), e2(b_perm);
  std::vector<Complex> v1(e1.eigenvalues().data(), e1.eigenvalues().data() + 3);
  std::vector<Complex> v2(e2.eigenvalues().data(), e2.eigenvalues().data() + 3);
  CHECK(ceig::testing::max_match_error(v2, v1) < 1e-10);
}

TEST_CASE("reduced-SVD projection equals the Ho-Kalman full-SVD block")
{
  problems::PlantedSpec spec;
  spec.dim = 9;
  spec.eigenvalues = {Complex(0.4, 0.3), Complex(-0.5, 0.0)};
  spec.seed = 81;
  auto problem = problems::make_planted_problem(spec);
  ProbingConfig probes = make_gaussian_probes(9, 3, 3, 15);
  MomentSet moments = exact_markov_set(problem, probes, 3);
  auto [pair, sides] = build_hankel(moments, 2);

  TruncatedSvd svd = truncated_svd(pair.h, RankPolicy{});
  REQUIRE(svd.rank == 2);
  Matrix b_red = svd.u.adjoint() * pair.hs * svd.v *
                 svd.singular_values.cwiseInverse().asDiagonal();

  Eigen::JacobiSVD<Matrix> full(pair.h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealVector pinv = full.singularValues();
  for (int i = 0; i < pinv.size(); i++)
  {
    pinv(i) = pinv(i) > 1e-12 * full.singularValues()(0) ? 1.0 / pinv(i) : 0.0;
  }
  Matrix b_full = full.matrixU().adjoint() * pair.hs * full.matrixV() *
                  pinv.asDiagonal();
  CHECK((b_full.topLeftCorner(2, 2) - b_red).norm() < 1e-12);
}

TEST_CASE("empty spectrum when no eigenvalue lies inside")
{
  auto problem = ceig::testing::scalar_linear(5.0);  // eigenvalue far outside
  Contour contour = build_contour_circle(0.0, 1.0, 32);
  ProbingConfig probes = make_probes(Matrix::Ones(1, 1), Matrix::Ones(1, 1));
  QuadratureData data = compute_quadrature_data(problem, contour, probes);
  auto [pair, sides] = build_hankel(markov_moments(data, 1), 1);
  EigenSolution solution = solve_hankel(pair, sides, RankPolicy{1e-8, 1e-10, {}});
  CHECK(solution.empty_spectrum());
  CHECK(solution.rank_used == 0);
}

TEST_CASE("delay problem: Hankel residual at N=64 meets the 1e-6 target")
{
  auto problem = problems::make_delay_problem();
  Contour contour = build_contour_circle(Complex(-0.0625, 0.0), 0.142, 64);
  ProbingConfig probes = make_gaussian_probes(50, 11, 11, 1);
  QuadratureData data = compute_quadrature_data(problem, contour, probes);
  auto [pair, sides] = build_hankel(markov_moments(data, 9), 5);
  RankPolicy policy;
  policy.forced_rank = 11;
  EigenSolution solution = solve_hankel(pair, sides, policy);
  solution = filter_eigenvalues_to_domain(solution, contour);
  residual_report(problem, solution);
  REQUIRE(solution.eigenvalues.size() == 11);
  CHECK(solution.max_residual() <= 1e-6);
}

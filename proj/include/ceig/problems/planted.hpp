// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_PROBLEMS_PLANTED_HPP
#define CEIG_PROBLEMS_PLANTED_HPP

#include <cstdint>
#include <vector>

#include "ceig/loewner_multi.hpp"
#include "ceig/problem.hpp"

namespace ceig::problems
{

struct RemainderSpec
{
  enum class Kind
  {
    None,
    Polynomial,  // N(z) = Σ_d z^d C_d, random coefficient matrices
    Rational     // N(z) = Σ_p C_p / (z - p), poles supplied by the caller
  };
  Kind kind = Kind::None;
  int degree = 0;                // polynomial degree
  double scale = 0.1;            // magnitude of the random coefficient matrices
  std::vector<Complex> poles;    // rational poles; must lie outside the target region
};

struct PlantedSpec
{
  int dim = 0;
  std::vector<Complex> eigenvalues;  // distinct, inside the intended contour
  int v_rank = 0;                    // 0 = independent columns; otherwise rank(V)
  RemainderSpec remainder;
  std::uint64_t seed = 0;
};

// Synthetic problem defined through its resolvent in Keldysh form:
// T(z)^{-1} := V(zI-Λ)^{-1}W^* + N(z). solve() evaluates this directly, so
// every sampler has an exact closed-form oracle; apply() inverts the
// evaluated resolvent densely.
class PlantedProblem : public NlevpProblem
{
public:
  explicit PlantedProblem(const PlantedSpec &spec);

  int dim() const override { return n_; }
  Matrix apply(Complex z, const Matrix &v) const override;
  Matrix solve(Complex z, const Matrix &b) const override;
  Matrix solve_adjoint(Complex z, const Matrix &b) const override;

  int eigenvalue_count() const { return static_cast<int>(lambda_.size()); }
  const std::vector<Complex> &planted_eigenvalues() const { return lambda_; }
  const Matrix &planted_v() const { return v_; }
  const Matrix &planted_w() const { return w_; }

  // Closed-form oracles (exact up to rounding, no quadrature involved).
  Matrix resolvent(Complex z) const;           // V(zI-Λ)^{-1}W^* + N(z)
  Matrix transfer(Complex z) const;            // H(z)
  Matrix transfer_derivative(Complex z) const; // H'(z)
  Matrix remainder(Complex z) const;           // N(z)
  Matrix remainder_derivative(Complex z, int order) const;  // N^{(k)}(z)
  Matrix markov_moment(int order) const;                    // V Λ^k W^*
  Matrix sigma_moment(Complex sigma, int order) const;      // (-1)^k V(σI-Λ)^{-(k+1)}W^*

  /// Hankel factors: observability [L^*V; L^*VΛ; ...] (ℓK×m) and
  /// reachability [W^*R, ΛW^*R, ...] (m×rK).
  Matrix hankel_observability(const Matrix &probe_left, int block_count) const;
  Matrix hankel_reachability(const Matrix &probe_right, int block_count) const;

  /// Single-point factors with block i = (-1)^{i+1}L^*V(σI-Λ)^{-i} (and the
  /// transposed analog), so 𝕃 = -𝒪ℛ and 𝕃_s = -𝒪Λℛ.
  Matrix single_point_observability(const Matrix &probe_left, Complex sigma,
                                    int block_count) const;
  Matrix single_point_reachability(const Matrix &probe_right, Complex sigma,
                                   int block_count) const;

  /// Generalized factors for a multi-point scheme: row i of 𝒪 is
  /// ℓ_i^*V(θ_iI-Λ)^{-1}, column j of ℛ is (σ_jI-Λ)^{-1}W^*r_j.
  Matrix generalized_observability(const InterpolationScheme &scheme) const;
  Matrix generalized_reachability(const InterpolationScheme &scheme) const;

  /// Exact tangential samples and Loewner matrices for a scheme (the
  /// quadrature-free reference used by the interpolation tests).
  MultiPointLoewner exact_multipoint(const InterpolationScheme &scheme) const;

private:
  int n_ = 0;
  std::vector<Complex> lambda_;
  Matrix v_;  // n×m
  Matrix w_;  // n×m
  RemainderSpec::Kind remainder_kind_ = RemainderSpec::Kind::None;
  std::vector<Matrix> poly_coeffs_;   // C_0..C_d
  std::vector<Complex> rational_poles_;
  std::vector<Matrix> rational_coeffs_;
};

PlantedProblem make_planted_problem(const PlantedSpec &spec);

}  // namespace ceig::problems

#endif  // CEIG_PROBLEMS_PLANTED_HPP

// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_PROBLEM_HPP
#define CEIG_PROBLEM_HPP

#include <optional>

#include "ceig/types.hpp"

namespace ceig
{

// Black-box nonlinear eigenvalue problem T(λ)v = 0 with T analytic.
// Implementations expose actions of T(z), T(z)^{-1}, and T(z)^{-*}; the
// adjoint solve lets one factorization serve both the ℓ left and r right
// probe directions at a quadrature node.
class NlevpProblem
{
public:
  virtual ~NlevpProblem() = default;

  virtual int dim() const = 0;

  /// T(z) V
  virtual Matrix apply(Complex z, const Matrix &v) const = 0;

  /// T(z)^{-1} B; throws PointSingularError if T(z) is singular.
  virtual Matrix solve(Complex z, const Matrix &b) const = 0;

  /// T(z)^{-*} B, so that (solve_adjoint(z, L))^* = L^* T(z)^{-1}.
  virtual Matrix solve_adjoint(Complex z, const Matrix &b) const = 0;

  virtual bool has_derivative() const { return false; }

  /// T'(z) V when available.
  virtual Matrix apply_derivative(Complex /*z*/, const Matrix & /*v*/) const
  {
    throw std::logic_error("problem does not provide a derivative");
  }

  /// Dense T(z) when the problem can be assembled; enables relative
  /// residuals ‖T(λ)v‖₂/‖T(λ)‖_F.
  virtual std::optional<Matrix> assemble(Complex /*z*/) const { return std::nullopt; }
};

}  // namespace ceig

#endif  // CEIG_PROBLEM_HPP

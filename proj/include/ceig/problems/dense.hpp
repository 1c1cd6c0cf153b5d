// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_PROBLEMS_DENSE_HPP
#define CEIG_PROBLEMS_DENSE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "ceig/contour.hpp"
#include "ceig/problem.hpp"

namespace ceig::problems
{

// Scalar coefficient function f_i(z) in a split form T(z) = Σ f_i(z)·A_i.
// sqrt_shift uses the principal branch of √(z - α²); contour placement that
// avoids the cut is the caller's responsibility (see node_on_branch_cut).
struct CoeffFn
{
  enum class Kind
  {
    One,        // f(z) = 1
    Linear,     // f(z) = z
    SqrtShift,  // f(z) = sqrt(z - alpha^2), principal branch
    ExpScale,   // f(z) = c * exp(-tau z)
    Polynomial  // f(z) = Σ_d poly[d] z^d
  };
  Kind kind = Kind::One;
  double alpha = 0.0;
  double c = 1.0;
  double tau = 0.0;
  std::vector<Complex> poly;
  Complex scale = 1.0;  // multiplies f(z)

  Complex eval(Complex z) const;
  Complex eval_derivative(Complex z) const;

  static CoeffFn one(Complex scale = 1.0);
  static CoeffFn linear(Complex scale = 1.0);
  static CoeffFn sqrt_shift(double alpha, Complex scale = 1.0);
  static CoeffFn exp_scale(double c, double tau, Complex scale = 1.0);
  static CoeffFn polynomial(std::vector<Complex> coeffs, Complex scale = 1.0);
};

/// Dense split-form problem; solve() factors T(z) once per evaluation point
/// and serves both solve directions from that factorization.
class DenseMatrixProblem : public NlevpProblem
{
public:
  explicit DenseMatrixProblem(std::vector<std::pair<CoeffFn, Matrix>> terms);

  int dim() const override { return n_; }
  Matrix apply(Complex z, const Matrix &v) const override;
  Matrix solve(Complex z, const Matrix &b) const override;
  Matrix solve_adjoint(Complex z, const Matrix &b) const override;
  bool has_derivative() const override { return true; }
  Matrix apply_derivative(Complex z, const Matrix &v) const override;
  std::optional<Matrix> assemble(Complex z) const override;

  const std::vector<std::pair<CoeffFn, Matrix>> &terms() const { return terms_; }

private:
  Matrix assembled(Complex z) const;
  std::vector<std::pair<CoeffFn, Matrix>> terms_;
  int n_ = 0;
};

/// Matrix Market reader (array and coordinate formats, real/complex/integer,
/// general/symmetric/hermitian/skew-symmetric), returned dense.
Matrix load_matrix_market(const std::filesystem::path &path);

/// T(z) = Σ f_i(z)·A_i with the A_i read from Matrix Market files.
DenseMatrixProblem load_matrix_problem(
    const std::vector<std::pair<CoeffFn, std::filesystem::path>> &combiner);

/// Convenience scalar/matrix polynomial problems: T(z) = Σ_d z^d C_d.
DenseMatrixProblem make_polynomial_problem(std::vector<Matrix> coeffs);
DenseMatrixProblem make_scalar_polynomial(std::vector<Complex> coeffs);

/// True if z sits on (within tol of) the branch cut of a sqrt_shift term.
bool node_on_branch_cut(const CoeffFn &fn, Complex z, double tol = 1e-12);

/// Indices of contour nodes lying on a branch cut of any term.
std::vector<int> branch_cut_node_warnings(const DenseMatrixProblem &problem,
                                          const Contour &contour);

}  // namespace ceig::problems

#endif  // CEIG_PROBLEMS_DENSE_HPP

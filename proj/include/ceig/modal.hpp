// SPDX-License-Identifier: Apache-2.0

#ifndef CEIG_MODAL_HPP
#define CEIG_MODAL_HPP

#include <functional>

#include "ceig/loewner_multi.hpp"

namespace ceig
{

// Transfer function G(z) of a linear time-invariant system, either as a
// black-box evaluator or assembled from a state-space triple (A, B, C) with
// G(z) = C(zI - A)^{-1}B.
class LtiSource
{
public:
  LtiSource(std::function<Matrix(Complex)> evaluator, int n_outputs, int n_inputs,
            int order);
  static LtiSource from_state_space(Matrix a, Matrix b, Matrix c);

  Matrix eval(Complex z) const;
  int n_outputs() const { return n_outputs_; }
  int n_inputs() const { return n_inputs_; }
  int order() const { return order_; }
  bool has_state_space() const { return has_state_space_; }
  const Matrix &state_a() const { return a_; }
  const Matrix &state_b() const { return b_; }
  const Matrix &state_c() const { return c_; }

private:
  std::function<Matrix(Complex)> evaluator_;
  int n_outputs_ = 0;
  int n_inputs_ = 0;
  int order_ = 0;
  bool has_state_space_ = false;
  Matrix a_, b_, c_;
};

// Reduced model G_r(z) = Σ_j c_j b_j^* / (z - λ_j) with rank-one residues,
// b_j normalized to unit norm.
struct ModalRom
{
  std::vector<Complex> poles;
  Matrix c_factors;  // n_o × m
  Matrix b_factors;  // n_i × m (residue j is c_j b_j^*)
  std::vector<double> singular_values;
  bool under_resolved = false;    // numerical rank fell below expectations
  bool clustered_poles = false;   // poles within 1e-8 relative of each other
  int poles_outside_contour = 0;

  Matrix eval(Complex z) const;
  int order() const { return static_cast<int>(poles.size()); }
};

/// Tangential samples of the retained part G_r: quadrature-filtered rows
/// ℓ_i^*G(ζ_k) and columns G(ζ_k)r_j (G evaluated directly, no inverse).
/// Node evaluations run in parallel.
MultiPointLoewner sample_retained(const LtiSource &source, const Contour &contour,
                                  const InterpolationScheme &scheme);

/// Data-driven modal truncation: Loewner realization of the retained part,
/// poles and rank-one residue factors extracted from the diagonalized pencil.
ModalRom modal_truncate(const LtiSource &source, const Contour &contour,
                        const InterpolationScheme &scheme, const RankPolicy &policy);

}  // namespace ceig

#endif  // CEIG_MODAL_HPP

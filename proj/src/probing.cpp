// SPDX-License-Identifier: Apache-2.0

#include "ceig/probing.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ceig
{

Matrix complex_gaussian(int rows, int cols, std::uint64_t seed)
{
  std::mt19937_64 gen(seed);
  auto uniform = [&gen]() {
    // uniform in (0, 1]; avoids log(0)
    return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
  };
  Matrix out(rows, cols);
  for (int j = 0; j < cols; j++)
  {
    for (int i = 0; i < rows; i++)
    {
      double u1 = uniform(), u2 = uniform();
      double mag = std::sqrt(-std::log(u1));  // Box-Muller, CN(0,1) overall
      double phase = 2.0 * std::numbers::pi * u2;
      out(i, j) = Complex(mag * std::cos(phase), mag * std::sin(phase));
    }
  }
  return out;
}

ProbingConfig make_gaussian_probes(int dim, int n_left, int n_right, std::uint64_t seed)
{
  if (n_left < 1 || n_right < 1)
  {
    throw std::invalid_argument("probing requires at least one left and one right direction");
  }
  ProbingConfig p;
  p.seed = seed;
  p.left = complex_gaussian(dim, n_left, seed);
  p.right = complex_gaussian(dim, n_right, seed + 0x9e3779b97f4a7c15ull);
  return p;
}

ProbingConfig make_probes(Matrix left, Matrix right)
{
  if (left.rows() != right.rows())
  {
    throw std::invalid_argument("probing matrices must share the problem dimension");
  }
  if (left.cols() < 1 || right.cols() < 1)
  {
    throw std::invalid_argument("probing requires at least one left and one right direction");
  }
  for (int j = 0; j < left.cols(); j++)
  {
    if (left.col(j).norm() == 0.0)
    {
      throw std::invalid_argument("left probing column " + std::to_string(j) + " is zero");
    }
  }
  for (int j = 0; j < right.cols(); j++)
  {
    if (right.col(j).norm() == 0.0)
    {
      throw std::invalid_argument("right probing column " + std::to_string(j) + " is zero");
    }
  }
  ProbingConfig p;
  p.left = std::move(left);
  p.right = std::move(right);
  return p;
}

}  // namespace ceig

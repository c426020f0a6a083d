#pragma once

#include <vector>

namespace qtorus {

/// Nodes and weights of an n-point rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line
/// (Golub-Welsch: eigenvalues of the symmetric Jacobi matrix).
QuadratureRule gauss_hermite(int n);

/// Midpoint rule on [lo, hi] with n cells.
QuadratureRule midpoint(int n, double lo, double hi);

}  // namespace qtorus

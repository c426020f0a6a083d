#include "qtorus/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qtorus/errors.hpp"
#include "qtorus/planck.hpp"

namespace qtorus {

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw ArgumentError("gauss_hermite: need at least one node");
  // Physicists' Hermite recurrence: off-diagonal sqrt(j/2), zero diagonal.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    jacobi(j, j - 1) = jacobi(j - 1, j) = std::sqrt(0.5 * j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::sqrt(kPi);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule midpoint(int n, double lo, double hi) {
  if (n < 1) throw ArgumentError("midpoint: need at least one cell");
  QuadratureRule rule;
  const double h = (hi - lo) / n;
  rule.nodes.resize(n);
  rule.weights.assign(n, h);
  for (int i = 0; i < n; ++i) rule.nodes[i] = lo + (i + 0.5) * h;
  return rule;
}

}  // namespace qtorus

#include "qtorus/quantize.hpp"

#include <cmath>

#include "qtorus/bargmann.hpp"
#include "qtorus/errors.hpp"
#include "qtorus/quadrature.hpp"

namespace qtorus {

double toeplitz_damping(const WeylIndex& v, const PlanckParameter& planck) {
  const double m = to_double(v.m);
  const double k = to_double(v.k);
  return std::exp(-kPi * kPi * planck.hbar() * (m * m + k * k));
}

AlgebraElement quantize(const TorusSymbol& f, const PlanckParameter& planck) {
  AlgebraElement::Terms terms;
  for (const auto& [v, c] : f.modes()) {
    terms.emplace_hint(terms.end(), v, c * toeplitz_damping(v, planck));
  }
  return AlgebraElement(planck, std::move(terms));
}

Complex symbol_integral(const TorusSymbol& f) { return f.coefficient(WeylIndex{0, 0}); }

double egorov_defect(const TorusSymbol& f, const ToralAutomorphism& alpha,
                     const PlanckParameter& planck) {
  const AlgebraElement evolved = apply_automorphism(alpha, quantize(f, planck), 1);
  const AlgebraElement pushed = quantize(classical_pushforward(f, alpha, 1), planck);
  return koopman_distance(evolved, pushed);
}

SectorMatrix toeplitz_sector_matrix(const TorusSymbol& f, const PlanckParameter& planck,
                                    const ThetaPoint& theta, int grid) {
  if (grid < 2) throw ArgumentError("toeplitz_sector_matrix: grid must be >= 2");
  const std::int64_t n = planck.n();
  const QuadratureRule rule = midpoint(grid, 0.0, 1.0);
  const Eigen::Index cells = static_cast<Eigen::Index>(grid) * grid;
  Eigen::MatrixXcd samples(cells, n);
  Eigen::VectorXcd weights(cells);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const Eigen::Index row = static_cast<Eigen::Index>(i) * grid + j;
      const double x = rule.nodes[i];
      const double q = rule.nodes[j];
      const Complex z = phase_space_point(x, q);
      weights(row) = 0.5 * rule.weights[i] * rule.weights[j] * bargmann_density(z, planck) *
                     f.evaluate(x, -q);
      for (std::int64_t m = 0; m < n; ++m) samples(row, m) = theta_basis_value(m, theta, planck, z);
    }
  }
  return SectorMatrix(Eigen::MatrixXcd(samples.adjoint() * weights.asDiagonal() * samples));
}

}  // namespace qtorus

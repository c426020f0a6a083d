#include "qtorus/theta_rep.hpp"

#include <cmath>
#include <string>

#include "qtorus/errors.hpp"

namespace qtorus {
namespace {

double reduce_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

void require_same_dim(const SectorMatrix& a, const SectorMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& base, std::int64_t e) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(base.rows(), base.cols());
  Eigen::MatrixXcd b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

// Adds c * rep(W(v)) into out. rep(W(m,k)) maps e_j to a multiple of e_r with
// r = (j + k) mod N:
//   v^k e_j = e^{2 pi i theta2 k / N} e_r   (no extra phase at the wrap edge)
//   u^m e_r = e^{2 pi i m (theta1 + r) / N} e_r.
void accumulate_monomial(Eigen::MatrixXcd& out, const WeylIndex& v, Complex c,
                         const PlanckParameter& planck, const ThetaPoint& theta) {
  const std::int64_t n = planck.n();
  const long double m_ld = v.m.convert_to<long double>();
  const long double k_ld = v.k.convert_to<long double>();
  const long double turns_ld = (m_ld * theta.theta1() + k_ld * theta.theta2()) / n;
  const double turns = static_cast<double>(turns_ld - std::floor(turns_ld));
  const Complex base = c * normal_order_factor(v, planck) * std::polar(1.0, 2.0 * kPi * turns);

  const std::int64_t k_mod = floor_mod(v.k, n);
  const std::int64_t m_mod = floor_mod(v.m, n);
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t r = (j + k_mod) % n;
    // e^{2 pi i m r / N} = half_phase(2 m r).
    out(r, j) += base * planck.half_phase(2 * ((m_mod * r) % n));
  }
}

}  // namespace

ThetaPoint::ThetaPoint(double theta1, double theta2)
    : theta1_(reduce_unit(theta1)), theta2_(reduce_unit(theta2)) {}

SectorMatrix::SectorMatrix(std::int64_t dim) : m_(Storage::Zero(dim, dim)) {
  if (dim < 1) throw ArgumentError("SectorMatrix: dimension must be >= 1");
}

SectorMatrix::SectorMatrix(Storage m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw DimensionMismatch("SectorMatrix: expected a non-empty square matrix");
  }
}

SectorMatrix SectorMatrix::identity(std::int64_t dim) {
  SectorMatrix out(dim);
  out.m_.setIdentity();
  return out;
}

double SectorMatrix::max_abs_diff(const SectorMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

SectorMatrix operator*(const SectorMatrix& a, const SectorMatrix& b) {
  require_same_dim(a, b, "SectorMatrix product");
  return SectorMatrix(SectorMatrix::Storage(a.m_ * b.m_));
}

SectorMatrix operator+(const SectorMatrix& a, const SectorMatrix& b) {
  require_same_dim(a, b, "SectorMatrix sum");
  return SectorMatrix(SectorMatrix::Storage(a.m_ + b.m_));
}

SectorMatrix operator-(const SectorMatrix& a, const SectorMatrix& b) {
  require_same_dim(a, b, "SectorMatrix difference");
  return SectorMatrix(SectorMatrix::Storage(a.m_ - b.m_));
}

SectorGenerators sector_generators(const PlanckParameter& planck, const ThetaPoint& theta) {
  const std::int64_t n = planck.n();
  SectorMatrix u(n);
  SectorMatrix v(n);
  const Complex shift_phase = std::polar(1.0, 2.0 * kPi * theta.theta2() / static_cast<double>(n));
  const Complex clock_base = std::polar(1.0, 2.0 * kPi * theta.theta1() / static_cast<double>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    u(j, j) = clock_base * planck.half_phase(2 * j);
    v((j + 1) % n, j) = shift_phase;
  }
  return {std::move(u), std::move(v)};
}

SectorMatrix represent(const AlgebraElement& a, const ThetaPoint& theta) {
  const PlanckParameter& planck = a.planck();
  SectorMatrix out(planck.n());
  for (const auto& [v, c] : a.terms()) accumulate_monomial(out.matrix(), v, c, planck, theta);
  return out;
}

SectorMatrix represent(const AlgebraElement& a, const ThetaPoint& theta, std::int64_t dim) {
  if (dim != a.planck().n()) {
    throw DimensionMismatch("represent: element has N=" + std::to_string(a.planck().n()) +
                            " but sector dimension " + std::to_string(dim) + " was requested");
  }
  return represent(a, theta);
}

Complex sector_trace(const SectorMatrix& m) {
  return m.matrix().trace() / static_cast<double>(m.dim());
}

Complex theta_averaged_trace(const AlgebraElement& a, std::int64_t grid) {
  if (grid <= 0) {
    throw ArgumentError("theta_averaged_trace: grid must be >= 1, got " + std::to_string(grid));
  }
  Complex sum{};
  const double q = static_cast<double>(grid);
  for (std::int64_t i = 0; i < grid; ++i) {
    for (std::int64_t j = 0; j < grid; ++j) {
      sum += sector_trace(represent(a, ThetaPoint(i / q, j / q)));
    }
  }
  return sum / (q * q);
}

SectorMatrix dft_matrix(std::int64_t n) {
  if (n < 1) throw ArgumentError("dft_matrix: n must be >= 1, got " + std::to_string(n));
  const PlanckParameter p(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  SectorMatrix f(n);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c) f(r, c) = scale * p.half_phase(-2 * ((r * c) % n));
  }
  return f;
}

double unitarity_defect(const SectorMatrix& f) {
  const auto& m = f.matrix();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
}

SectorMatrix conjugate_evolve(const SectorMatrix& f, const SectorMatrix& a, std::int64_t n) {
  require_same_dim(f, a, "conjugate_evolve");
  constexpr double kUnitarityTol = 1e-10;
  const double defect = unitarity_defect(f);
  if (defect > kUnitarityTol) {
    throw ValidationError("conjugate_evolve: propagator is not unitary, ||F^dagger F - I|| = " +
                              std::to_string(defect),
                          defect);
  }
  const std::int64_t e = n >= 0 ? n : -n;
  const Eigen::MatrixXcd fn = matrix_power(f.matrix(), e);
  if (n >= 0) return SectorMatrix(Eigen::MatrixXcd(fn.adjoint() * a.matrix() * fn));
  return SectorMatrix(Eigen::MatrixXcd(fn * a.matrix() * fn.adjoint()));
}

}  // namespace qtorus

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qtorus/weyl_algebra.hpp"

namespace qtorus {

/// A point theta = (theta1, theta2) of the parameter torus, reduced into [0,1)^2.
class ThetaPoint {
 public:
  ThetaPoint() = default;
  ThetaPoint(double theta1, double theta2);

  double theta1() const noexcept { return theta1_; }
  double theta2() const noexcept { return theta2_; }

  friend bool operator==(const ThetaPoint&, const ThetaPoint&) = default;

 private:
  double theta1_ = 0.0;
  double theta2_ = 0.0;
};

/// An operator on the N-dimensional sector H(theta), dense.
class SectorMatrix {
 public:
  using Storage = Eigen::MatrixXcd;

  explicit SectorMatrix(std::int64_t dim);
  explicit SectorMatrix(Storage m);

  static SectorMatrix identity(std::int64_t dim);

  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(m_.rows()); }
  Complex operator()(std::int64_t row, std::int64_t col) const { return m_(row, col); }
  Complex& operator()(std::int64_t row, std::int64_t col) { return m_(row, col); }

  const Storage& matrix() const noexcept { return m_; }
  Storage& matrix() noexcept { return m_; }

  SectorMatrix adjoint() const { return SectorMatrix(Storage(m_.adjoint())); }

  /// Largest entry-wise modulus of the difference; dims must agree.
  double max_abs_diff(const SectorMatrix& other) const;
  double frobenius_norm() const { return m_.norm(); }

  friend SectorMatrix operator*(const SectorMatrix& a, const SectorMatrix& b);
  friend SectorMatrix operator+(const SectorMatrix& a, const SectorMatrix& b);
  friend SectorMatrix operator-(const SectorMatrix& a, const SectorMatrix& b);
  friend SectorMatrix operator*(Complex s, const SectorMatrix& a) {
    return SectorMatrix(Storage(s * a.m_));
  }
  friend bool operator==(const SectorMatrix& a, const SectorMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Storage m_;
};

/// Clock and shift matrices of the sector:
///   u e_m = e^{2 pi i (theta1 + m)/N} e_m,
///   v e_m = e^{2 pi i theta2 / N} e_{(m+1) mod N}.
/// The wrap edge e_{N-1} -> e_0 carries phase 1, so u^N = e^{2 pi i theta1} I and
/// v^N = e^{2 pi i theta2} I.
struct SectorGenerators {
  SectorMatrix u;
  SectorMatrix v;
};

SectorGenerators sector_generators(const PlanckParameter& planck, const ThetaPoint& theta);

/// The sector image of a, built monomial by monomial:
///   W(m,k) -> e^{-i lambda m k/2} u^m v^k,
/// which is a *-homomorphism since uv = e^{i lambda} vu.
SectorMatrix represent(const AlgebraElement& a, const ThetaPoint& theta);

/// As above; throws DimensionMismatch unless dim == a.planck().n().
SectorMatrix represent(const AlgebraElement& a, const ThetaPoint& theta, std::int64_t dim);

/// Normalized trace (1/N) Tr.
Complex sector_trace(const SectorMatrix& m);

/// Average of sector_trace(represent(a, theta)) over the uniform Q x Q grid
/// theta = (i/Q, j/Q). Exact (equal to trace(a)) when Q > max(|m|,|k|)/N on the
/// support of a. Throws ArgumentError for Q <= 0.
Complex theta_averaged_trace(const AlgebraElement& a, std::int64_t grid);

/// F_{mn} = e^{-2 pi i m n / N} / sqrt(N). Throws ArgumentError for n < 1.
SectorMatrix dft_matrix(std::int64_t n);

/// ||F^dagger F - I||_F.
double unitarity_defect(const SectorMatrix& f);

/// F^{-n} a F^{n} for a unitary propagator F (F^{-1} = F^dagger).
/// Throws ValidationError when unitarity_defect(f) > 1e-10 and
/// DimensionMismatch when dims differ.
SectorMatrix conjugate_evolve(const SectorMatrix& f, const SectorMatrix& a, std::int64_t n);

}  // namespace qtorus

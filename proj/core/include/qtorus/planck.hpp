#pragma once

#include <complex>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtorus {

using Complex = std::complex<double>;
using Integer = boost::multiprecision::cpp_int;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Planck's constant restricted to h = 1/N.
///
/// hbar = 1/(2 pi N) and the commutation angle lambda = 4 pi^2 hbar = 2 pi / N,
/// so UV = e^{i lambda} VU. Phases of the form e^{i lambda j / 2} = e^{i pi j/N}
/// are evaluated from the integer j reduced mod 2N.
class PlanckParameter {
 public:
  /// Throws ArgumentError unless n >= 1.
  explicit PlanckParameter(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  double h() const noexcept { return 1.0 / static_cast<double>(n_); }
  double hbar() const noexcept { return 1.0 / (2.0 * kPi * static_cast<double>(n_)); }
  double lambda() const noexcept { return 2.0 * kPi / static_cast<double>(n_); }

  /// e^{i pi j / N}, i.e. e^{i lambda j / 2}.
  Complex half_phase(const Integer& j) const;
  Complex half_phase(std::int64_t j) const;

  friend bool operator==(const PlanckParameter&, const PlanckParameter&) = default;

 private:
  std::int64_t n_;
};

/// e^{i pi r / d} for 0 <= r < 2d, exact at multiples of a quarter turn.
Complex rational_phase(std::int64_t r, std::int64_t d);

/// Floor-mod for arbitrary-precision integers; result in [0, mod).
std::int64_t floor_mod(const Integer& value, std::int64_t mod);

/// Lossy conversion used where an index enters a floating-point formula.
double to_double(const Integer& value);

}  // namespace qtorus

#include "qtorus/planck.hpp"

#include <cmath>
#include <string>

#include "qtorus/errors.hpp"

namespace qtorus {

PlanckParameter::PlanckParameter(std::int64_t n) : n_(n) {
  if (n < 1) {
    throw ArgumentError("PlanckParameter: N must be >= 1, got " + std::to_string(n));
  }
}

Complex PlanckParameter::half_phase(const Integer& j) const {
  return rational_phase(floor_mod(j, 2 * n_), n_);
}

Complex PlanckParameter::half_phase(std::int64_t j) const {
  std::int64_t r = j % (2 * n_);
  if (r < 0) r += 2 * n_;
  return rational_phase(r, n_);
}

Complex rational_phase(std::int64_t r, std::int64_t d) {
  // Quarter turns first: r/d in {0, 1/2, 1, 3/2}.
  if ((2 * r) % d == 0) {
    switch ((2 * r) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  // Centre on (-d, d]: phase(-j) is the exact conjugate of phase(j).
  const std::int64_t centred = r > d ? r - 2 * d : r;
  const double angle = kPi * static_cast<double>(centred) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t floor_mod(const Integer& value, std::int64_t mod) {
  Integer r = value % mod;
  if (r < 0) r += mod;
  return r.convert_to<std::int64_t>();
}

double to_double(const Integer& value) { return value.convert_to<double>(); }

}  // namespace qtorus

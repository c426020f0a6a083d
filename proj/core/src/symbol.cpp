#include "qtorus/symbol.hpp"

#include <cmath>

namespace qtorus {

TorusSymbol TorusSymbol::constant(Complex c) { return mode(WeylIndex{0, 0}, c); }

TorusSymbol TorusSymbol::mode(const WeylIndex& v, Complex c) {
  TorusSymbol f;
  f.add_mode(v, c);
  return f;
}

Complex TorusSymbol::coefficient(const WeylIndex& v) const {
  auto it = modes_.find(v);
  return it == modes_.end() ? Complex{} : it->second;
}

void TorusSymbol::add_mode(const WeylIndex& v, Complex c) {
  auto [it, inserted] = modes_.try_emplace(v, c);
  if (!inserted) it->second += c;
}

Complex TorusSymbol::evaluate(double x, double p) const {
  Complex sum{};
  for (const auto& [v, c] : modes_) {
    // Reduce the phase argument mod 1 before scaling by 2 pi.
    double arg = std::fmod(to_double(v.m) * x + to_double(v.k) * p, 1.0);
    sum += c * std::polar(1.0, 2.0 * kPi * arg);
  }
  return sum;
}

bool TorusSymbol::is_real(double tol) const {
  for (const auto& [v, c] : modes_) {
    if (std::abs(coefficient(-v) - std::conj(c)) > tol) return false;
  }
  return true;
}

}  // namespace qtorus

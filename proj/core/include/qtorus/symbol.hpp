#pragma once

#include <map>

#include "qtorus/planck.hpp"
#include "qtorus/weyl_algebra.hpp"

namespace qtorus {

/// A trigonometric polynomial on the classical torus,
///   f(x, p) = sum_{(m,k)} c_{mk} e^{2 pi i (m x + k p)}.
class TorusSymbol {
 public:
  using Modes = std::map<WeylIndex, Complex>;

  TorusSymbol() = default;
  explicit TorusSymbol(Modes modes) : modes_(std::move(modes)) {}

  static TorusSymbol constant(Complex c);
  static TorusSymbol mode(const WeylIndex& v, Complex c = {1.0, 0.0});

  const Modes& modes() const noexcept { return modes_; }
  Complex coefficient(const WeylIndex& v) const;
  void add_mode(const WeylIndex& v, Complex c);

  /// Point evaluation; large mode indices lose precision through to_double.
  Complex evaluate(double x, double p) const;

  /// c_{-v} == conj(c_v) for every mode within tol.
  bool is_real(double tol = 0.0) const;

  friend bool operator==(const TorusSymbol&, const TorusSymbol&) = default;

 private:
  Modes modes_;
};

}  // namespace qtorus

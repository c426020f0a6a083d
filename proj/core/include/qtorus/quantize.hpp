#pragma once

#include "qtorus/dynamics.hpp"
#include "qtorus/symbol.hpp"
#include "qtorus/theta_rep.hpp"
#include "qtorus/weyl_algebra.hpp"

namespace qtorus {

/// gamma_hbar(m, k) = e^{-pi^2 hbar (m^2 + k^2)}.
///
/// Toeplitz quantization is anti-Wick ordered: T(z^m conj(z)^n) = A^n (A^dagger)^m
/// with [A, A^dagger] = hbar. For a plane wave e^{2 pi i (m x + k p)} =
/// e^{s z + t conj(z)} (z = (x - i p)/sqrt2) this gives
///   T = e^{t A} e^{s A^dagger} = e^{t A + s A^dagger} e^{[tA, sA^dagger]/2}
///     = e^{t A + s A^dagger} e^{s t hbar / 2},
/// and s t = -2 pi^2 (m^2 + k^2), so the symmetric (Weyl) exponential, i.e.
/// W(m, k), is damped by gamma. Checked independently against the Toeplitz
/// integral in toeplitz_sector_matrix.
double toeplitz_damping(const WeylIndex& v, const PlanckParameter& planck);

/// c_{mk} e^{2 pi i (m x + k p)} -> c_{mk} gamma_hbar(m, k) W(m, k).
AlgebraElement quantize(const TorusSymbol& f, const PlanckParameter& planck);

/// int_{T^2} f dx dp = c_{00}.
Complex symbol_integral(const TorusSymbol& f);

/// || alpha_1(quantize(f)) - quantize(f o T) || in the Koopman norm.
double egorov_defect(const TorusSymbol& f, const ToralAutomorphism& alpha,
                     const PlanckParameter& planck);

/// Matrix of the Toeplitz operator T_hbar(f) in the orthonormal sector basis
/// {phi_m^(theta)}, by direct quadrature of
///   M_{jm} = int_D f conj(phi_j) phi_m d mu_hbar
/// over the fundamental cell with a grid x grid midpoint rule.
///
/// The cell is parametrized as z = (x - i q)/sqrt2, (x, q) in [0,1]^2, and the
/// symbol is evaluated at (x, p) = (x, -q): with V = U(hbar pi sqrt2) the
/// generator e^{2 pi i p} is quantized along the opposite orientation of
/// Im z. The result should equal represent(quantize(f), theta).
SectorMatrix toeplitz_sector_matrix(const TorusSymbol& f, const PlanckParameter& planck,
                                    const ThetaPoint& theta, int grid = 200);

}  // namespace qtorus

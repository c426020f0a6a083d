#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtorus/planck.hpp"
#include "qtorus/theta_rep.hpp"

namespace qtorus {

// ---------------------------------------------------------------------------
// Jacobi theta series
// ---------------------------------------------------------------------------

struct ThetaSeriesParams {
  double tolerance = 1e-15;
  int max_terms = 1000;
};

struct ThetaSeriesResult {
  Complex value;
  std::int64_t k_min = 0;  // summed k in [k_min, k_max]
  std::int64_t k_max = 0;
  double tail_bound = 0.0;  // bound on |omitted terms|
};

/// theta(omega, tau) = sum_{k in Z} e^{i pi k^2 tau + 2 pi i k omega}.
///
/// |term_k| = e^{-pi y k^2 - 2 pi b k} with y = Im tau, b = Im omega, which
/// peaks at k* = -b/y. Terms are summed outward from k* until the geometric
/// bound on both tails drops below params.tolerance.
///
/// Throws DomainError when Im tau <= 0, ArgumentError for invalid params and
/// ConvergenceError (carrying the achieved bound) if more than
/// params.max_terms terms would be needed.
ThetaSeriesResult jacobi_theta_series(Complex omega, Complex tau,
                                      const ThetaSeriesParams& params = {});

inline Complex jacobi_theta(Complex omega, Complex tau, const ThetaSeriesParams& params = {}) {
  return jacobi_theta_series(omega, tau, params).value;
}

// ---------------------------------------------------------------------------
// Theta-sector basis of Bargmann space at h = 1/N
// ---------------------------------------------------------------------------

/// phi_m^(theta), 0 <= m < N.
struct BasisWavefunction {
  BasisWavefunction(std::int64_t m, ThetaPoint theta, PlanckParameter planck);

  std::int64_t m;
  ThetaPoint theta;
  PlanckParameter planck;
};

/// C_m(theta) = (2/N)^{1/4} e^{-pi (theta1 + m)^2 / N - 2 pi i theta2 m / N}.
Complex basis_normalization(std::int64_t m, const ThetaPoint& theta, const PlanckParameter& planck);

/// phi_m(z) = C_m e^{-N pi z^2 + 2 sqrt2 pi (theta1 + m) z}
///            theta(-i sqrt2 N z + i(theta1 + i theta2 + m), iN),
/// for any integer m (the wrap relation phi_{m+N} = phi_m is checked, not assumed).
Complex theta_basis_value(std::int64_t m, const ThetaPoint& theta, const PlanckParameter& planck,
                          Complex z, const ThetaSeriesParams& params = {});

Complex basis_value(const BasisWavefunction& b, Complex z, const ThetaSeriesParams& params = {});

/// z = (x - i p)/sqrt(2).
inline Complex phase_space_point(double x, double p) {
  return Complex{x, -p} / 1.4142135623730950488;
}

/// Density of d mu_hbar against planar Lebesgue measure d^2 z:
/// (pi hbar)^{-1} e^{-|z|^2 / hbar}.
double bargmann_density(Complex z, const PlanckParameter& planck);

/// Sector inner product over the fundamental cell
///   D = {(x - i p)/sqrt2 : (x, p) in [0,1]^2},  d^2 z = dx dp / 2,
/// by the tensor midpoint rule with grid x grid cells.
/// Throws ArgumentError for grid < 2 and ParameterMismatch when b1, b2 differ
/// in N or theta.
Complex quadrature_inner_product(const BasisWavefunction& b1, const BasisWavefunction& b2,
                                 int grid = 200);

/// All N^2 sector inner products at once, sharing the basis samples.
SectorMatrix basis_gram_matrix(const PlanckParameter& planck, const ThetaPoint& theta,
                               int grid = 200);

// ---------------------------------------------------------------------------
// Translations on Bargmann space
// ---------------------------------------------------------------------------

using Wavefunction = std::function<Complex(Complex)>;

/// (U(a) psi)(z) = exp((conj(a) z - |a|^2/2)/hbar) psi(z - a).
Wavefunction translation_apply(Complex a, const PlanckParameter& planck, Wavefunction psi);

/// e^{i Im(conj(a) b)/hbar}, so that U(a)U(b) = cocycle * U(a+b).
Complex translation_cocycle(Complex a, Complex b, const PlanckParameter& planck);

/// Shifts realizing the algebra generators: U = U(-i hbar pi sqrt2),
/// V = U(hbar pi sqrt2). The centre X = U^N, Y = V^N are N times these.
Complex generator_shift_u(const PlanckParameter& planck);
Complex generator_shift_v(const PlanckParameter& planck);

// ---------------------------------------------------------------------------
// Delta-comb wavefunctions and the DFT relation between them
// ---------------------------------------------------------------------------

enum class CombKind { Position, Momentum };

struct Spike {
  double location;
  Complex amplitude;
};

/// Truncated comb, spikes for k in [-K, K]:
///   position: Phi_m  = (e^{2 pi i theta2 m/N}/sqrt N) sum_k e^{2 pi i theta2 k}  |(m+theta1)/N + k>_x
///   momentum: ~Phi_n = (e^{-2 pi i n theta1/N}/sqrt N) sum_k e^{-2 pi i theta1 k} |(theta2+n)/N + k>_p
struct DeltaComb {
  CombKind kind;
  std::int64_t base_index;
  ThetaPoint theta;
  std::int64_t n;
  std::int64_t truncation;
  std::vector<Spike> spikes;
};

/// Throws ArgumentError unless 0 <= m < N and K >= 0.
DeltaComb build_comb(CombKind kind, std::int64_t m, const ThetaPoint& theta,
                     const PlanckParameter& planck, std::int64_t truncation);

/// A Gaussian wavepacket used to pair against combs:
///   psi(x) = exp(-(x - center)^2 / (2 width^2) + 2 pi i N momentum x).
/// Its momentum-space form uses <p|x> = sqrt(N) e^{-2 pi i N p x}.
struct GaussianProbe {
  double center;
  double momentum;
  double width;

  Complex position_value(double x, const PlanckParameter& planck) const;
  Complex momentum_value(double p, const PlanckParameter& planck) const;
};

/// <probe | comb>, evaluated spike by spike in the comb's own representation.
Complex comb_pairing(const GaussianProbe& probe, const DeltaComb& comb,
                     const PlanckParameter& planck);

struct DftLemmaCheck {
  double max_deviation;   // max |<psi|Phi_m> - e^{-2pi i theta1 theta2/N} sum_n F_mn <psi|~Phi_n>|
  SectorMatrix recovered; // least-squares change of basis M with Phi_m = sum_n M_mn ~Phi_n
  SectorMatrix expected;  // e^{-2 pi i theta1 theta2 / N} F
};

/// Pairs both sides of Phi_m = e^{-2 pi i theta1 theta2/N} sum_n F_mn ~Phi_n
/// against the N^2 probes centred at ((a+1/2)/N, (b+1/2)/N) with width
/// sqrt(hbar). Throws ArgumentError for K < 1.
DftLemmaCheck check_dft_lemma(const ThetaPoint& theta, const PlanckParameter& planck,
                              std::int64_t truncation);

inline double verify_dft_lemma(const ThetaPoint& theta, const PlanckParameter& planck,
                               std::int64_t truncation) {
  return check_dft_lemma(theta, planck, truncation).max_deviation;
}

// ---------------------------------------------------------------------------
// Diffraction kernel of the sector inner product on [0, 1)
// ---------------------------------------------------------------------------

/// g(r) = (1/(2 pi hbar)) e^{-hbar r^2 + i r} sin(r)/r, with g(0) = 1/(2 pi hbar).
Complex kernel_g(double r, double hbar);
inline Complex kernel_g(double r, const PlanckParameter& planck) {
  return kernel_g(r, planck.hbar());
}

/// K(x, y) = g((x - y) / (2 hbar)).
Complex diffraction_kernel(double x, double y, const PlanckParameter& planck);

/// (c1, c2)_P = int_0^1 conj(c1(x)) (K c2)(x) dx for two position combs: the
/// double sum over c1's spikes in [0,1) and all of c2's spikes.
/// Throws ParameterMismatch when N or theta differ and ArgumentError for
/// momentum combs.
Complex comb_inner_product(const DeltaComb& c1, const DeltaComb& c2);

/// Full width at half maximum of |g(u / (2 hbar))|^2 as a function of u = x - y.
double kernel_fwhm(double hbar);

struct KernelPlotRow {
  double r;
  double g_abs2;
};

/// |g(r / (2 hbar))|^2 sampled on [-5, 5] (501 points by default), with
/// hbar = h when figure_convention is set and hbar = h / (2 pi) otherwise.
std::vector<KernelPlotRow> kernel_plot(double h, bool figure_convention, int points = 501);

// ---------------------------------------------------------------------------
// Integrals against d mu_hbar over the whole plane
// ---------------------------------------------------------------------------

/// int_C f(w) d mu_hbar(w) by a tensor Gauss-Hermite rule with `nodes` points
/// per axis (w = sqrt(hbar)(s + i t)).
Complex bargmann_integral(const std::function<Complex(Complex)>& f, const PlanckParameter& planck,
                          int nodes = 64);

/// int_C e^{z conj(w)/hbar} psi(w) d mu_hbar(w); equals psi(z) for entire psi.
Complex reproducing_kernel_apply(const Wavefunction& psi, Complex z, const PlanckParameter& planck,
                                 int nodes = 64);

/// (z^n, z^m) = int conj(w)^n w^m d mu_hbar(w).
Complex monomial_inner_product(int n, int m, const PlanckParameter& planck, int nodes = 64);

}  // namespace qtorus

#include <qtorus/bargmann.hpp>
#include <qtorus/errors.hpp>
#include <qtorus/quadrature.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qtorus {
namespace {

using testing::Gen;

const Complex kI{0.0, 1.0};

TEST(JacobiTheta, KnownConstants) {
  EXPECT_NEAR(jacobi_theta({0.0, 0.0}, kI).real(), 1.0864348112133080, 1e-15);
  EXPECT_NEAR(jacobi_theta({0.5, 0.0}, kI).real(), 0.91357913815611682, 1e-15);
}

TEST(JacobiTheta, MatchesBruteForcePartialSums) {
  Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex omega{gen.real(-2.0, 2.0), gen.real(-1.0, 1.0)};
    const Complex tau{gen.real(-1.0, 1.0), gen.real(0.3, 3.0)};
    const Complex expected = testing::brute_force_theta(omega, tau);
    EXPECT_LT(std::abs(jacobi_theta(omega, tau) - expected), 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(JacobiTheta, QuasiPeriodicity) {
  Gen gen(52);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex omega{gen.real(-1.0, 1.0), gen.real(-0.5, 0.5)};
    const Complex tau{gen.real(-0.5, 0.5), gen.real(0.5, 2.0)};
    const Complex base = jacobi_theta(omega, tau);
    EXPECT_LT(std::abs(jacobi_theta(omega + 1.0, tau) - base), 1e-12 * std::abs(base));
    const Complex shifted = jacobi_theta(omega + tau, tau) * std::exp(kI * kPi * tau + 2.0 * kI * kPi * omega);
    EXPECT_LT(std::abs(shifted - base), 1e-11 * std::abs(base));
  }
}

TEST(JacobiTheta, LargeImaginaryArgumentStaysAccurate) {
  const Complex omega{0.25, 7.3};
  const Complex tau{0.0, 1.0};
  // Reduce with the quasi-period omega -> omega - 7 tau.
  Complex reduced = jacobi_theta(omega - 7.0 * tau, tau);
  for (int j = 0; j < 7; ++j) {
    const Complex w = omega - static_cast<double>(7 - j) * tau;
    reduced *= std::exp(-kI * kPi * tau - 2.0 * kI * kPi * w);
  }
  const Complex direct = jacobi_theta(omega, tau);
  EXPECT_LT(std::abs(direct - reduced), 1e-12 * std::abs(direct));
}

TEST(JacobiTheta, ReportsWindowAndTail) {
  const auto r = jacobi_theta_series({0.1, 0.0}, {0.0, 1.0});
  EXPECT_LE(r.k_min, 0);
  EXPECT_GE(r.k_max, 0);
  EXPECT_LE(r.tail_bound, 1e-15);
}

TEST(JacobiTheta, Errors) {
  EXPECT_THROW(jacobi_theta({0.0, 0.0}, {0.0, 0.0}), DomainError);
  EXPECT_THROW(jacobi_theta({0.0, 0.0}, {0.0, -1.0}), DomainError);
  EXPECT_THROW(jacobi_theta({0.0, 0.0}, kI, {0.0, 10}), ArgumentError);
  try {
    jacobi_theta({0.0, 0.0}, {0.0, 1e-6}, {1e-15, 5});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.achieved_bound(), 1e-15);
  }
}

TEST(ThetaBasis, GramMatrixIsIdentity) {
  Gen gen(53);
  for (std::int64_t n = 1; n <= 4; ++n) {
    const PlanckParameter p(n);
    for (int trial = 0; trial < 2; ++trial) {
      const ThetaPoint theta = gen.theta();
      const SectorMatrix gram = basis_gram_matrix(p, theta);
      EXPECT_LT(gram.max_abs_diff(SectorMatrix::identity(n)), 1e-6) << "N=" << n;
    }
  }
}

TEST(ThetaBasis, PairwiseQuadratureAgreesWithGram) {
  const PlanckParameter p(3);
  const ThetaPoint theta(0.3, 0.8);
  const SectorMatrix gram = basis_gram_matrix(p, theta, 60);
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t j = 0; j < 3; ++j) {
      const Complex ip = quadrature_inner_product({i, theta, p}, {j, theta, p}, 60);
      EXPECT_LT(std::abs(ip - gram(i, j)), 1e-13);
    }
  }
  EXPECT_THROW(quadrature_inner_product({0, theta, p}, {0, ThetaPoint(0.1, 0.1), p}),
               ParameterMismatch);
  EXPECT_THROW(quadrature_inner_product({0, theta, p}, {0, theta, p}, 1), ArgumentError);
  EXPECT_THROW(BasisWavefunction(3, theta, p), ArgumentError);
}

TEST(ThetaBasis, WrapIdentity) {
  Gen gen(54);
  for (std::int64_t n = 1; n <= 5; ++n) {
    const PlanckParameter p(n);
    const ThetaPoint theta = gen.theta();
    for (std::int64_t m = 0; m < n; ++m) {
      const Complex z{gen.real(-0.5, 1.0), gen.real(-0.7, 0.2)};
      const Complex a = theta_basis_value(m, theta, p, z);
      EXPECT_LT(std::abs(theta_basis_value(m + n, theta, p, z) - a), 1e-10 * std::abs(a));
    }
  }
}

TEST(ThetaBasis, GeneratorEigenrelations) {
  Gen gen(55);
  for (std::int64_t n = 1; n <= 6; ++n) {
    const PlanckParameter p(n);
    const ThetaPoint theta = gen.theta();
    const double nd = static_cast<double>(n);
    for (std::int64_t m = 0; m < n; ++m) {
      const Wavefunction phi = [=](Complex z) { return theta_basis_value(m, theta, p, z); };
      const Wavefunction next = [=](Complex z) { return theta_basis_value(m + 1, theta, p, z); };
      const auto u_phi = translation_apply(generator_shift_u(p), p, phi);
      const auto v_phi = translation_apply(generator_shift_v(p), p, phi);
      const auto x_phi = translation_apply(nd * generator_shift_u(p), p, phi);
      const auto y_phi = translation_apply(nd * generator_shift_v(p), p, phi);
      const Complex eu = std::polar(1.0, 2.0 * kPi * (theta.theta1() + static_cast<double>(m)) / nd);
      const Complex ev = std::polar(1.0, 2.0 * kPi * theta.theta2() / nd);
      for (int s = 0; s < 4; ++s) {
        const Complex z{gen.real(0.0, 0.7), gen.real(-0.7, 0.0)};
        const double scale = std::abs(phi(z)) + std::abs(next(z));
        EXPECT_LT(std::abs(u_phi(z) - eu * phi(z)), 1e-8 * scale);
        EXPECT_LT(std::abs(v_phi(z) - ev * next(z)), 1e-8 * scale);
        EXPECT_LT(std::abs(x_phi(z) - std::polar(1.0, 2.0 * kPi * theta.theta1()) * phi(z)), 1e-8 * scale);
        EXPECT_LT(std::abs(y_phi(z) - std::polar(1.0, 2.0 * kPi * theta.theta2()) * phi(z)), 1e-8 * scale);
      }
    }
  }
}

TEST(Translations, CocycleComposition) {
  const PlanckParameter p(3);
  const Wavefunction psi = [](Complex z) { return 1.0 + z * z - 0.5 * z * z * z; };
  const Complex a{0.03, -0.02};
  const Complex b{-0.01, 0.04};
  const auto ab = translation_apply(a, p, translation_apply(b, p, psi));
  const auto sum = translation_apply(a + b, p, psi);
  for (const Complex z : {Complex{0.1, 0.2}, Complex{-0.3, 0.05}, Complex{0.7, -0.4}}) {
    EXPECT_LT(std::abs(ab(z) - translation_cocycle(a, b, p) * sum(z)), 1e-13 * std::abs(ab(z)));
  }
}

TEST(Translations, GeneratorsCommuteUpToLambda) {
  for (std::int64_t n : {1, 2, 5, 12}) {
    const PlanckParameter p(n);
    const Complex u = generator_shift_u(p);
    const Complex v = generator_shift_v(p);
    const Complex ratio = translation_cocycle(u, v, p) / translation_cocycle(v, u, p);
    EXPECT_LT(std::abs(ratio - std::polar(1.0, p.lambda())), 1e-14);
  }
}

TEST(Quadrature, GaussHermiteIntegratesPolynomials) {
  const auto rule = gauss_hermite(20);
  double m0 = 0.0;
  double m2 = 0.0;
  double m4 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    m0 += rule.weights[i];
    m2 += rule.weights[i] * t * t;
    m4 += rule.weights[i] * t * t * t * t;
  }
  EXPECT_NEAR(m0, std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(m2, std::sqrt(kPi) / 2.0, 1e-13);
  EXPECT_NEAR(m4, 3.0 * std::sqrt(kPi) / 4.0, 1e-13);
}

TEST(PlaneIntegrals, ReproducingKernel) {
  Gen gen(56);
  for (std::int64_t n : {1, 3, 8}) {
    const PlanckParameter p(n);
    for (int degree = 0; degree <= 4; ++degree) {
      std::vector<Complex> coeffs;
      for (int j = 0; j <= degree; ++j) coeffs.push_back(gen.complex_unit_box());
      const Wavefunction poly = [coeffs](Complex z) {
        Complex s{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * z + *it;
        return s;
      };
      for (double x : {-0.3, 0.0, 0.4}) {
        for (double y : {-0.2, 0.25}) {
          const Complex z{x, y};
          EXPECT_LT(std::abs(reproducing_kernel_apply(poly, z, p) - poly(z)), 1e-6);
        }
      }
    }
  }
}

TEST(PlaneIntegrals, MonomialNorms) {
  const PlanckParameter p(2);
  double fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    EXPECT_NEAR(monomial_inner_product(n, n, p).real(), std::pow(p.hbar(), n) * fact,
                1e-12 * std::pow(p.hbar(), n) * fact);
    for (int m = 0; m < n; ++m) EXPECT_LT(std::abs(monomial_inner_product(n, m, p)), 1e-14);
  }
  EXPECT_NEAR(bargmann_integral([](Complex) { return Complex{1.0, 0.0}; }, p).real(), 1.0, 1e-13);
}

TEST(Combs, DftLemmaSmallSectors) {
  Gen gen(57);
  for (std::int64_t n = 1; n <= 4; ++n) {
    const ThetaPoint theta = gen.theta();
    const auto check = check_dft_lemma(theta, PlanckParameter(n), 30);
    EXPECT_LT(check.recovered.max_abs_diff(check.expected), 1e-8);
    EXPECT_LT(check.max_deviation, 1e-8);
  }
  EXPECT_THROW(check_dft_lemma(ThetaPoint{}, PlanckParameter(2), 0), ArgumentError);
}

TEST(Combs, ExpectedMatrixIsPhasedDft) {
  const ThetaPoint theta(0.3, 0.6);
  const PlanckParameter p(3);
  const auto check = check_dft_lemma(theta, p, 10);
  const Complex phase = std::polar(1.0, -2.0 * kPi * 0.3 * 0.6 / 3.0);
  EXPECT_LT(check.expected.max_abs_diff(phase * dft_matrix(3)), 1e-15);
}

TEST(Combs, Orthonormality) {
  Gen gen(58);
  for (std::int64_t n = 1; n <= 4; ++n) {
    const PlanckParameter p(n);
    const ThetaPoint theta = gen.theta();
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        const auto ci = build_comb(CombKind::Position, i, theta, p, 50);
        const auto cj = build_comb(CombKind::Position, j, theta, p, 50);
        EXPECT_LT(std::abs(comb_inner_product(ci, cj) - (i == j ? 1.0 : 0.0)), 1e-4);
      }
    }
  }
}

TEST(Combs, Construction) {
  const PlanckParameter p(2);
  const auto c = build_comb(CombKind::Momentum, 1, ThetaPoint(0.25, 0.5), p, 3);
  EXPECT_EQ(c.spikes.size(), 7u);
  EXPECT_NEAR(c.spikes[3].location, (0.5 + 1.0) / 2.0, 1e-15);
  EXPECT_THROW(build_comb(CombKind::Position, 2, ThetaPoint{}, p, 3), ArgumentError);
  EXPECT_THROW(build_comb(CombKind::Position, 0, ThetaPoint{}, p, -1), ArgumentError);
  EXPECT_THROW(comb_inner_product(c, c), ArgumentError);
}

TEST(Kernel, PeakAndSmallArgument) {
  for (double hbar : {0.1, 0.01, 1.0 / (2.0 * kPi * 7.0)}) {
    EXPECT_NEAR(kernel_g(0.0, hbar).real(), 1.0 / (2.0 * kPi * hbar), 1e-12 / hbar);
    const Complex near = kernel_g(1e-9, hbar);
    EXPECT_LT(std::abs(near - kernel_g(0.0, hbar)), 1e-8 / hbar);
  }
  const double hbar = 0.05;
  const double r = 1.3;
  const Complex expected = std::exp(Complex{-hbar * r * r, r}) * std::sin(r) / r / (2.0 * kPi * hbar);
  EXPECT_LT(std::abs(kernel_g(r, hbar) - expected), 1e-14);
}

TEST(Kernel, FwhmHalvesWithHbar) {
  for (double hbar : {0.1, 0.05, 0.02, 0.01}) {
    const double ratio = kernel_fwhm(hbar) / kernel_fwhm(hbar / 2.0);
    EXPECT_NEAR(ratio, 2.0, 0.2) << "hbar=" << hbar;
  }
}

TEST(Kernel, PlotSamples) {
  const auto rows = kernel_plot(0.1, true);
  ASSERT_EQ(rows.size(), 501u);
  EXPECT_DOUBLE_EQ(rows.front().r, -5.0);
  EXPECT_DOUBLE_EQ(rows.back().r, 5.0);
  EXPECT_DOUBLE_EQ(rows[250].r, 0.0);
  double peak = 0.0;
  for (const auto& row : rows) peak = std::max(peak, row.g_abs2);
  EXPECT_NEAR(peak, std::pow(10.0 / (2.0 * kPi), 2), 1e-12);
  EXPECT_NEAR(peak, 2.533, 1e-3);
  const auto library = kernel_plot(0.1, false);
  EXPECT_NEAR(library[250].g_abs2, std::pow(1.0 / 0.1, 2), 1e-9);
}

}  // namespace
}  // namespace qtorus

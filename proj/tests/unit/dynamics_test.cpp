#include <qtorus/dynamics.hpp>
#include <qtorus/errors.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qtorus {
namespace {

using testing::Gen;

const ToralAutomorphism kCat = ToralAutomorphism::cat(2, 1, 1, 1);
const ToralAutomorphism kShift = ToralAutomorphism::kronecker(std::sqrt(2.0) - 1.0, std::sqrt(3.0) - 1.0);

TEST(ToralAutomorphism, RejectsDeterminantOtherThanOne) {
  try {
    ToralAutomorphism::cat(2, 1, 1, 2);
    FAIL() << "expected ArgumentError";
  } catch (const ArgumentError& e) {
    EXPECT_STREQ(e.what(), "cat map determinant must be 1");
  }
  EXPECT_THROW(ToralAutomorphism::cat(1, 1, 1, 1), ArgumentError);
  EXPECT_NO_THROW(ToralAutomorphism::cat(1, 1, 0, 1));
}

TEST(ToralAutomorphism, KroneckerShiftIsReducedModOne) {
  const auto k = ToralAutomorphism::kronecker(1.25, -0.25);
  EXPECT_DOUBLE_EQ(k.shift().t1, 0.25);
  EXPECT_DOUBLE_EQ(k.shift().t2, 0.75);
  EXPECT_EQ(k.to_string(), "kronecker:0.25,0.75");
  EXPECT_EQ(kCat.to_string(), "cat:2,1,1,1");
}

TEST(Dynamics, CatActsOnIndicesByMatrix) {
  const PlanckParameter p(8);
  EXPECT_EQ(apply_automorphism(kCat, weyl_monomial({1, 0}, p), 1), weyl_monomial({2, 1}, p));
  EXPECT_EQ(apply_automorphism(kCat, weyl_monomial({1, 0}, p), 2), weyl_monomial({5, 3}, p));
  EXPECT_EQ(apply_automorphism(kCat, weyl_monomial({1, 0}, p), -1), weyl_monomial({1, -1}, p));
}

TEST(Dynamics, KroneckerMultipliesByCharacter) {
  const PlanckParameter p(4);
  const auto k = ToralAutomorphism::kronecker(0.1, 0.3);
  const auto out = apply_automorphism(k, weyl_monomial({2, 1}, p), 3);
  const Complex expected = std::polar(1.0, 2.0 * kPi * 3.0 * (2.0 * 0.1 + 0.3));
  EXPECT_LT(std::abs(out.coefficient({2, 1}) - expected), 1e-13);
}

TEST(DynamicsProperty, AutomorphismIsStarHomomorphism) {
  Gen gen(31);
  for (const auto& alpha : {kCat, kShift}) {
    for (std::int64_t n : {2, 5, 8}) {
      const PlanckParameter p(n);
      for (int trial = 0; trial < 50; ++trial) {
        const auto a = gen.element(p);
        const auto b = gen.element(p);
        const std::int64_t steps = gen.integer(-6, 6);
        EXPECT_LT(koopman_distance(apply_automorphism(alpha, a * b, steps),
                                   apply_automorphism(alpha, a, steps) *
                                       apply_automorphism(alpha, b, steps)),
                  1e-12);
        EXPECT_LT(koopman_distance(apply_automorphism(alpha, adjoint(a), steps),
                                   adjoint(apply_automorphism(alpha, a, steps))),
                  1e-12);
      }
    }
  }
}

TEST(DynamicsProperty, GroupLaw) {
  Gen gen(32);
  const PlanckParameter p(5);
  for (const auto& alpha : {kCat, kShift}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = gen.element(p);
      const std::int64_t s = gen.integer(-10, 10);
      const std::int64_t t = gen.integer(-10, 10);
      EXPECT_LT(koopman_distance(apply_automorphism(alpha, apply_automorphism(alpha, a, s), t),
                                 apply_automorphism(alpha, a, s + t)),
                1e-12);
    }
    const auto a = gen.element(p);
    EXPECT_EQ(apply_automorphism(alpha, a, 0), a);
  }
}

TEST(DynamicsProperty, TraceInvariantAndIsometric) {
  Gen gen(33);
  const PlanckParameter p(16);
  for (const auto& alpha : {kCat, kShift}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = gen.element(p);
      for (std::int64_t n = -20; n <= 20; ++n) {
        const auto evolved = apply_automorphism(alpha, a, n);
        EXPECT_EQ(trace(evolved), trace(a));
        EXPECT_NEAR(koopman_norm(evolved), koopman_norm(a), 1e-12);
      }
    }
  }
}

TEST(Dynamics, CesaroNormOfHyperbolicOrbit) {
  const PlanckParameter p(8);
  const auto a = weyl_monomial({1, 0}, p);
  for (std::int64_t m : {1, 2, 3, 10, 57, 200}) {
    EXPECT_NEAR(koopman_norm(cesaro_average(kCat, a, m)), 1.0 / std::sqrt(static_cast<double>(m)),
                1e-12);
    EXPECT_LE(time_average_drift(kCat, a, m), 2.0 / static_cast<double>(m) + 1e-12);
  }
}

TEST(Dynamics, SweepAgreesWithDirectDefect) {
  Gen gen(34);
  const PlanckParameter p(5);
  for (const auto& alpha : {kCat, kShift}) {
    const auto a = gen.element(p);
    const auto sweep = ergodicity_sweep(alpha, a, 40);
    ASSERT_EQ(sweep.steps.size(), 40u);
    for (std::int64_t m : {1, 7, 40}) {
      EXPECT_EQ(sweep.steps[m - 1], m);
      EXPECT_NEAR(sweep.values[m - 1].real(), ergodicity_defect(alpha, a, m), 1e-12);
    }
    EXPECT_EQ(sweep.limit_reference, Complex(0.0, 0.0));
  }
}

TEST(Dynamics, KroneckerDefectMatchesGeometricSum) {
  const double t = 0.4142135623;
  const auto alpha = ToralAutomorphism::kronecker(t, 0.0);
  const auto sweep = ergodicity_sweep(alpha, weyl_monomial({1, 0}, PlanckParameter(8)), 1000);
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    const double m = static_cast<double>(sweep.steps[i]);
    const double oracle = std::abs(std::sin(kPi * m * t) / (m * std::sin(kPi * t)));
    EXPECT_NEAR(sweep.values[i].real(), oracle, 1e-12) << "M=" << m;
  }
}

TEST(Dynamics, RationalShiftStalls) {
  const auto alpha = ToralAutomorphism::kronecker(0.5, 0.0);
  const auto sweep = ergodicity_sweep(alpha, weyl_monomial({2, 0}, PlanckParameter(8)), 100);
  for (const auto& v : sweep.values) EXPECT_NEAR(v.real(), 1.0, 1e-12);
}

TEST(Dynamics, LongCatOrbitUsesExactIndices) {
  const PlanckParameter p(4);
  const auto sweep = ergodicity_sweep(kCat, weyl_monomial({1, 0}, p), 1000);
  EXPECT_NEAR(sweep.values.back().real(), 1.0 / std::sqrt(1000.0), 1e-12);
  const auto far = apply_automorphism(kCat, weyl_monomial({1, 0}, p), 999);
  EXPECT_GT(far.terms().begin()->first.m, Integer(1) << 1000);
}

TEST(Dynamics, CatMixingExample) {
  const PlanckParameter p(8);
  const auto a = weyl_monomial({1, 0}, p);
  const auto b = weyl_monomial({-2, -1}, p);
  EXPECT_EQ(mixing_correlation(kCat, a, b, 1), Complex(1.0, 0.0));
  for (std::int64_t n = 2; n <= 50; ++n) EXPECT_EQ(mixing_correlation(kCat, a, b, n), Complex(0.0, 0.0));
  const auto sweep = mixing_sweep(kCat, a, b, 10);
  EXPECT_EQ(sweep.values.front(), Complex(1.0, 0.0));
  EXPECT_EQ(sweep.limit_reference, Complex(0.0, 0.0));
}

TEST(Dynamics, KroneckerDoesNotMix) {
  const PlanckParameter p(8);
  const auto a = weyl_monomial({1, 0}, p);
  const auto b = weyl_monomial({-1, 0}, p);
  for (std::int64_t n = 1; n <= 50; ++n) {
    EXPECT_NEAR(std::abs(mixing_correlation(kShift, a, b, n)), 1.0, 1e-12);
  }
}

TEST(Dynamics, MixingReferenceIsProductOfTraces) {
  const PlanckParameter p(3);
  AlgebraElement a = weyl_monomial({1, 1}, p) + Complex(0.5, 0.0) * AlgebraElement::identity(p);
  AlgebraElement b = Complex(2.0, 0.0) * AlgebraElement::identity(p);
  EXPECT_EQ(mixing_sweep(kCat, a, b, 3).limit_reference, Complex(1.0, 0.0));
  EXPECT_THROW(mixing_correlation(kCat, a, weyl_monomial({0, 0}, PlanckParameter(4)), 1),
               ParameterMismatch);
}

TEST(Dynamics, PushforwardMatchesPointEvaluation) {
  Gen gen(35);
  for (const auto& alpha : {kCat, ToralAutomorphism::cat(1, 1, 0, 1), kShift}) {
    const TorusSymbol f = gen.symbol(5, 3);
    const TorusSymbol g = classical_pushforward(f, alpha, 1);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        const double x = (i + 0.3) / 7.0;
        const double p = (j + 0.6) / 7.0;
        double x1 = 0.0;
        double p1 = 0.0;
        if (alpha.is_cat()) {
          const auto& a = alpha.cat_map();
          x1 = static_cast<double>(a.a) * x + static_cast<double>(a.c) * p;
          p1 = static_cast<double>(a.b) * x + static_cast<double>(a.d) * p;
        } else {
          x1 = x + alpha.shift().t1;
          p1 = p + alpha.shift().t2;
        }
        EXPECT_LT(std::abs(g.evaluate(x, p) - f.evaluate(x1, p1)), 1e-11);
      }
    }
  }
}

TEST(Dynamics, InvariantMonomialProbe) {
  EXPECT_EQ(find_invariant_monomials(kCat, 4, 20), std::vector<WeylIndex>{WeylIndex(0, 0)});
  EXPECT_EQ(find_invariant_monomials(kShift, 4, 50), std::vector<WeylIndex>{WeylIndex(0, 0)});
  const auto half = find_invariant_monomials(ToralAutomorphism::kronecker(0.5, 0.0), 2, 1);
  const std::vector<WeylIndex> expected = {{-2, -2}, {-2, -1}, {-2, 0}, {-2, 1}, {-2, 2},
                                           {0, -2},  {0, -1},  {0, 0},  {0, 1},  {0, 2},
                                           {2, -2},  {2, -1},  {2, 0},  {2, 1},  {2, 2}};
  EXPECT_EQ(half, expected);
  const auto third = find_invariant_monomials(ToralAutomorphism::kronecker(1.0 / 3.0, 0.0), 1, 3);
  EXPECT_EQ(third.size(), 9u);
  EXPECT_THROW(find_invariant_monomials(kCat, -1, 3), ArgumentError);
  EXPECT_THROW(find_invariant_monomials(kCat, 1, 0), ArgumentError);
}

TEST(Dynamics, FiniteOrderCatMapHasInvariants) {
  // [[0,-1],[1,0]] has order 4.
  const auto rotation = ToralAutomorphism::cat(0, -1, 1, 0);
  EXPECT_EQ(find_invariant_monomials(rotation, 1, 4).size(), 9u);
  EXPECT_EQ(find_invariant_monomials(rotation, 1, 1).size(), 1u);
}

TEST(Dynamics, RejectsNonPositiveStepCounts) {
  const auto a = weyl_monomial({1, 0}, PlanckParameter(3));
  EXPECT_THROW(cesaro_average(kCat, a, 0), ArgumentError);
  EXPECT_THROW(ergodicity_sweep(kCat, a, -1), ArgumentError);
  EXPECT_THROW(mixing_sweep(kCat, a, a, 0), ArgumentError);
}

}  // namespace
}  // namespace qtorus

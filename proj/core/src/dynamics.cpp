#include "qtorus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtorus/errors.hpp"

namespace qtorus {
namespace {

struct IntMatrix {
  Integer a, b, c, d;

  IntMatrix operator*(const IntMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  WeylIndex apply(const WeylIndex& v) const { return {a * v.m + b * v.k, c * v.m + d * v.k}; }
};

IntMatrix matrix_power(const CatMap& cat, std::int64_t n) {
  // det = 1, so the inverse is the adjugate.
  IntMatrix base = n >= 0 ? IntMatrix{cat.a, cat.b, cat.c, cat.d}
                          : IntMatrix{cat.d, -cat.b, -cat.c, cat.a};
  std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
  IntMatrix result{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

double frac(long double x) {
  long double f = x - std::floor(x);
  return static_cast<double>(f);
}

// v . t reduced mod 1.
double shift_pairing(const WeylIndex& v, const Kronecker& t) {
  long double m = v.m.convert_to<long double>();
  long double k = v.k.convert_to<long double>();
  return frac(frac(m * t.t1) + frac(k * t.t2));
}

void require_positive_steps(std::int64_t steps, const char* what) {
  if (steps <= 0) {
    throw ArgumentError(std::string(what) + ": number of steps must be >= 1, got " +
                        std::to_string(steps));
  }
}

}  // namespace

ToralAutomorphism ToralAutomorphism::cat(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t d) {
  if (a * d - b * c != 1) throw ArgumentError("cat map determinant must be 1");
  return ToralAutomorphism(CatMap{a, b, c, d});
}

ToralAutomorphism ToralAutomorphism::kronecker(double t1, double t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2)) {
    throw ArgumentError("kronecker shift must be finite");
  }
  return ToralAutomorphism(Kronecker{frac(t1), frac(t2)});
}

std::string ToralAutomorphism::to_string() const {
  std::ostringstream os;
  if (is_cat()) {
    const auto& m = cat_map();
    os << "cat:" << m.a << ',' << m.b << ',' << m.c << ',' << m.d;
  } else {
    os.precision(17);
    os << "kronecker:" << shift().t1 << ',' << shift().t2;
  }
  return os.str();
}

WeylIndex ToralAutomorphism::map_index(const WeylIndex& v, std::int64_t n) const {
  if (!is_cat() || n == 0) return v;
  return matrix_power(cat_map(), n).apply(v);
}

Complex ToralAutomorphism::index_phase(const WeylIndex& v, std::int64_t n) const {
  if (!is_kronecker() || n == 0) return {1.0, 0.0};
  const double turns = frac(static_cast<long double>(n) * shift_pairing(v, shift()));
  return std::polar(1.0, 2.0 * kPi * turns);
}

AlgebraElement apply_automorphism(const ToralAutomorphism& alpha, const AlgebraElement& a,
                                  std::int64_t n) {
  AlgebraElement::Terms terms;
  if (alpha.is_cat()) {
    // A^n is a bijection on Z^2, so no two terms collide.
    const IntMatrix power = matrix_power(alpha.cat_map(), n);
    for (const auto& [v, c] : a.terms()) terms.emplace(power.apply(v), c);
  } else {
    for (const auto& [v, c] : a.terms()) {
      terms.emplace_hint(terms.end(), v, c * alpha.index_phase(v, n));
    }
  }
  return AlgebraElement(a.planck(), std::move(terms));
}

AlgebraElement cesaro_average(const ToralAutomorphism& alpha, const AlgebraElement& a,
                              std::int64_t steps) {
  require_positive_steps(steps, "cesaro_average");
  AlgebraElement sum(a.planck());
  AlgebraElement current = a;
  for (std::int64_t j = 0; j < steps; ++j) {
    sum += current;
    if (j + 1 < steps) current = apply_automorphism(alpha, current, 1);
  }
  sum *= Complex{1.0 / static_cast<double>(steps), 0.0};
  return sum;
}

double ergodicity_defect(const ToralAutomorphism& alpha, const AlgebraElement& a,
                         std::int64_t steps) {
  AlgebraElement avg = cesaro_average(alpha, a, steps);
  avg.add_term(WeylIndex{0, 0}, -trace(a));
  return koopman_norm(avg);
}

double time_average_drift(const ToralAutomorphism& alpha, const AlgebraElement& a,
                          std::int64_t steps) {
  AlgebraElement avg = cesaro_average(alpha, a, steps);
  return koopman_distance(apply_automorphism(alpha, avg, 1), avg);
}

Complex mixing_correlation(const ToralAutomorphism& alpha, const AlgebraElement& a,
                           const AlgebraElement& b, std::int64_t n) {
  if (!(a.planck() == b.planck())) {
    throw ParameterMismatch("mixing_correlation: operands built for N=" +
                            std::to_string(a.planck().n()) + " and N=" +
                            std::to_string(b.planck().n()));
  }
  // tau(x y) = sum_v x_v y_{-v}: the (0,0) coefficient of W(v)W(-v) carries
  // the phase e^{i lambda sigma(v,-v)/2} = 1.
  const AlgebraElement evolved = apply_automorphism(alpha, a, n);
  Complex sum{};
  for (const auto& [v, c] : evolved.terms()) sum += c * b.coefficient(-v);
  return sum;
}

TorusSymbol classical_pushforward(const TorusSymbol& f, const ToralAutomorphism& alpha,
                                  std::int64_t n) {
  TorusSymbol out;
  if (alpha.is_cat()) {
    const IntMatrix power = matrix_power(alpha.cat_map(), n);
    for (const auto& [v, c] : f.modes()) out.add_mode(power.apply(v), c);
  } else {
    for (const auto& [v, c] : f.modes()) out.add_mode(v, c * alpha.index_phase(v, n));
  }
  return out;
}

std::vector<WeylIndex> find_invariant_monomials(const ToralAutomorphism& alpha,
                                                std::int64_t degree_bound,
                                                std::int64_t n_max) {
  if (degree_bound < 0) throw ArgumentError("find_invariant_monomials: degree_bound must be >= 0");
  if (n_max < 1) throw ArgumentError("find_invariant_monomials: n_max must be >= 1");
  constexpr double kInvarianceTol = 1e-9;

  std::vector<WeylIndex> found;
  for (std::int64_t m = -degree_bound; m <= degree_bound; ++m) {
    for (std::int64_t k = -degree_bound; k <= degree_bound; ++k) {
      const WeylIndex v{m, k};
      bool invariant = false;
      if (alpha.is_cat()) {
        WeylIndex w = v;
        for (std::int64_t n = 1; n <= n_max && !invariant; ++n) {
          w = alpha.map_index(w, 1);
          invariant = (w == v);
        }
      } else {
        for (std::int64_t n = 1; n <= n_max && !invariant; ++n) {
          invariant = std::abs(alpha.index_phase(v, n) - Complex{1.0, 0.0}) < kInvarianceTol;
        }
      }
      if (invariant) found.push_back(v);
    }
  }
  return found;
}

DiagnosticsReport ergodicity_sweep(const ToralAutomorphism& alpha, const AlgebraElement& a,
                                   std::int64_t max_steps) {
  require_positive_steps(max_steps, "ergodicity_sweep");
  DiagnosticsReport report;
  report.steps.reserve(static_cast<std::size_t>(max_steps));
  report.values.reserve(static_cast<std::size_t>(max_steps));

  const Complex tau = trace(a);
  const WeylIndex origin{0, 0};
  AlgebraElement sum(a.planck());
  AlgebraElement current = a;
  for (std::int64_t m = 1; m <= max_steps; ++m) {
    sum += current;
    const double inv = 1.0 / static_cast<double>(m);
    double norm2 = 0.0;
    for (const auto& [v, c] : sum.terms()) {
      norm2 += v == origin ? std::norm(c * inv - tau) : std::norm(c * inv);
    }
    if (!sum.terms().contains(origin)) norm2 += std::norm(tau);
    report.steps.push_back(m);
    report.values.emplace_back(std::sqrt(norm2), 0.0);
    if (m < max_steps) current = apply_automorphism(alpha, current, 1);
  }
  return report;
}

DiagnosticsReport mixing_sweep(const ToralAutomorphism& alpha, const AlgebraElement& a,
                               const AlgebraElement& b, std::int64_t steps) {
  require_positive_steps(steps, "mixing_sweep");
  DiagnosticsReport report;
  report.limit_reference = trace(a) * trace(b);
  for (std::int64_t n = 1; n <= steps; ++n) {
    report.steps.push_back(n);
    report.values.push_back(mixing_correlation(alpha, a, b, n));
  }
  return report;
}

}  // namespace qtorus

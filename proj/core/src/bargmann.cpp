#include "qtorus/bargmann.hpp"

#include <cmath>
#include <string>

#include "qtorus/errors.hpp"
#include "qtorus/quadrature.hpp"

namespace qtorus {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr Complex kI{0.0, 1.0};

Complex integer_power(Complex base, int e) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// e^{2 pi i t}, reducing t mod 1 first.
Complex turn(double t) { return std::polar(1.0, 2.0 * kPi * (t - std::floor(t))); }

void require_same_sector(std::int64_t n1, const ThetaPoint& t1, std::int64_t n2,
                         const ThetaPoint& t2, const char* what) {
  if (n1 != n2 || !(t1 == t2)) {
    throw ParameterMismatch(std::string(what) + ": operands live in different sectors (N=" +
                            std::to_string(n1) + " vs N=" + std::to_string(n2) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

ThetaSeriesResult jacobi_theta_series(Complex omega, Complex tau, const ThetaSeriesParams& params) {
  const double y = tau.imag();
  if (!(y > 0.0)) throw DomainError("jacobi_theta: Im tau must be positive");
  if (!(params.tolerance > 0.0) || params.max_terms < 1) {
    throw ArgumentError("jacobi_theta: tolerance must be > 0 and max_terms >= 1");
  }
  const double b = omega.imag();
  auto log_modulus = [&](double k) { return -kPi * y * k * k - 2.0 * kPi * b * k; };
  auto term = [&](std::int64_t k) {
    const double kd = static_cast<double>(k);
    return std::exp(kI * kPi * kd * kd * tau + 2.0 * kI * kPi * kd * omega);
  };

  const double k_star = -b / y;
  const std::int64_t k0 = std::llround(k_star);

  // Tail bounds past the current edges: first omitted term over (1 - ratio),
  // where the ratio of successive moduli is e^{-pi y (2 |k - k*| + 1)}.
  auto upper_tail = [&](std::int64_t k_hi) {
    const double k = static_cast<double>(k_hi + 1);
    const double ratio = std::exp(-kPi * y * (2.0 * (k - k_star) + 1.0));
    return std::exp(log_modulus(k)) / (1.0 - ratio);
  };
  auto lower_tail = [&](std::int64_t k_lo) {
    const double k = static_cast<double>(k_lo - 1);
    const double ratio = std::exp(-kPi * y * (2.0 * (k_star - k) + 1.0));
    return std::exp(log_modulus(k)) / (1.0 - ratio);
  };

  ThetaSeriesResult result;
  result.k_min = result.k_max = k0;
  Complex sum = term(k0);
  double up = upper_tail(k0);
  double down = lower_tail(k0);
  while (up + down >= params.tolerance) {
    if (result.k_max - result.k_min + 1 >= params.max_terms) {
      throw ConvergenceError("jacobi_theta: max_terms=" + std::to_string(params.max_terms) +
                                 " reached with tail bound " + std::to_string(up + down),
                             up + down);
    }
    if (up >= down) {
      sum += term(++result.k_max);
      up = upper_tail(result.k_max);
    } else {
      sum += term(--result.k_min);
      down = lower_tail(result.k_min);
    }
  }
  result.value = sum;
  result.tail_bound = up + down;
  return result;
}

// ---------------------------------------------------------------------------

BasisWavefunction::BasisWavefunction(std::int64_t m_, ThetaPoint theta_, PlanckParameter planck_)
    : m(m_), theta(theta_), planck(planck_) {
  if (m < 0 || m >= planck.n()) {
    throw ArgumentError("BasisWavefunction: index m=" + std::to_string(m) +
                        " outside [0, " + std::to_string(planck.n()) + ")");
  }
}

Complex basis_normalization(std::int64_t m, const ThetaPoint& theta, const PlanckParameter& planck) {
  const double n = static_cast<double>(planck.n());
  const double shifted = theta.theta1() + static_cast<double>(m);
  return std::pow(2.0 / n, 0.25) * std::exp(-kPi * shifted * shifted / n) *
         turn(-theta.theta2() * static_cast<double>(m) / n);
}

Complex theta_basis_value(std::int64_t m, const ThetaPoint& theta, const PlanckParameter& planck,
                          Complex z, const ThetaSeriesParams& params) {
  const double n = static_cast<double>(planck.n());
  const double shifted = theta.theta1() + static_cast<double>(m);
  const Complex omega = -kI * kSqrt2 * n * z + kI * Complex{shifted, theta.theta2()};
  const Complex series = jacobi_theta(omega, Complex{0.0, n}, params);
  const Complex gaussian = std::exp(-n * kPi * z * z + 2.0 * kSqrt2 * kPi * shifted * z);
  return basis_normalization(m, theta, planck) * gaussian * series;
}

Complex basis_value(const BasisWavefunction& b, Complex z, const ThetaSeriesParams& params) {
  return theta_basis_value(b.m, b.theta, b.planck, z, params);
}

double bargmann_density(Complex z, const PlanckParameter& planck) {
  const double hbar = planck.hbar();
  return std::exp(-std::norm(z) / hbar) / (kPi * hbar);
}

Complex quadrature_inner_product(const BasisWavefunction& b1, const BasisWavefunction& b2,
                                 int grid) {
  if (grid < 2) throw ArgumentError("quadrature_inner_product: grid must be >= 2");
  require_same_sector(b1.planck.n(), b1.theta, b2.planck.n(), b2.theta,
                      "quadrature_inner_product");
  const QuadratureRule rule = midpoint(grid, 0.0, 1.0);
  Complex sum{};
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const Complex z = phase_space_point(rule.nodes[i], rule.nodes[j]);
      const double w = 0.5 * rule.weights[i] * rule.weights[j] * bargmann_density(z, b1.planck);
      sum += w * std::conj(basis_value(b1, z)) * basis_value(b2, z);
    }
  }
  return sum;
}

SectorMatrix basis_gram_matrix(const PlanckParameter& planck, const ThetaPoint& theta, int grid) {
  if (grid < 2) throw ArgumentError("basis_gram_matrix: grid must be >= 2");
  const std::int64_t n = planck.n();
  const QuadratureRule rule = midpoint(grid, 0.0, 1.0);
  Eigen::MatrixXcd samples(static_cast<Eigen::Index>(grid) * grid, n);
  Eigen::VectorXd weights(static_cast<Eigen::Index>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const Eigen::Index row = static_cast<Eigen::Index>(i) * grid + j;
      const Complex z = phase_space_point(rule.nodes[i], rule.nodes[j]);
      weights(row) = 0.5 * rule.weights[i] * rule.weights[j] * bargmann_density(z, planck);
      for (std::int64_t m = 0; m < n; ++m) samples(row, m) = theta_basis_value(m, theta, planck, z);
    }
  }
  return SectorMatrix(Eigen::MatrixXcd(samples.adjoint() * weights.asDiagonal() * samples));
}

// ---------------------------------------------------------------------------

Wavefunction translation_apply(Complex a, const PlanckParameter& planck, Wavefunction psi) {
  const double hbar = planck.hbar();
  return [a, hbar, psi = std::move(psi)](Complex z) {
    return std::exp((std::conj(a) * z - 0.5 * std::norm(a)) / hbar) * psi(z - a);
  };
}

Complex translation_cocycle(Complex a, Complex b, const PlanckParameter& planck) {
  return std::polar(1.0, (std::conj(a) * b).imag() / planck.hbar());
}

Complex generator_shift_u(const PlanckParameter& planck) {
  return Complex{0.0, -planck.hbar() * kPi * kSqrt2};
}

Complex generator_shift_v(const PlanckParameter& planck) {
  return Complex{planck.hbar() * kPi * kSqrt2, 0.0};
}

// ---------------------------------------------------------------------------

DeltaComb build_comb(CombKind kind, std::int64_t m, const ThetaPoint& theta,
                     const PlanckParameter& planck, std::int64_t truncation) {
  const std::int64_t n = planck.n();
  if (m < 0 || m >= n) {
    throw ArgumentError("build_comb: index " + std::to_string(m) + " outside [0, " +
                        std::to_string(n) + ")");
  }
  if (truncation < 0) throw ArgumentError("build_comb: truncation must be >= 0");

  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double scale = 1.0 / std::sqrt(nd);
  DeltaComb comb{kind, m, theta, n, truncation, {}};
  comb.spikes.reserve(static_cast<std::size_t>(2 * truncation + 1));
  for (std::int64_t k = -truncation; k <= truncation; ++k) {
    const double kd = static_cast<double>(k);
    if (kind == CombKind::Position) {
      const Complex amp = scale * turn(theta.theta2() * md / nd) * turn(theta.theta2() * kd);
      comb.spikes.push_back({(md + theta.theta1()) / nd + kd, amp});
    } else {
      const Complex amp = scale * turn(-md * theta.theta1() / nd) * turn(-theta.theta1() * kd);
      comb.spikes.push_back({(theta.theta2() + md) / nd + kd, amp});
    }
  }
  return comb;
}

Complex GaussianProbe::position_value(double x, const PlanckParameter& planck) const {
  const double n = static_cast<double>(planck.n());
  const double d = x - center;
  return std::exp(-d * d / (2.0 * width * width)) * turn(n * momentum * x);
}

Complex GaussianProbe::momentum_value(double p, const PlanckParameter& planck) const {
  // sqrt(N) int e^{-2 pi i N p x} psi(x) dx, closed form.
  const double n = static_cast<double>(planck.n());
  const double dp = p - momentum;
  const double envelope = std::sqrt(n) * width * std::sqrt(2.0 * kPi) *
                          std::exp(-2.0 * kPi * kPi * n * n * dp * dp * width * width);
  return envelope * turn(-n * dp * center);
}

Complex comb_pairing(const GaussianProbe& probe, const DeltaComb& comb,
                     const PlanckParameter& planck) {
  Complex sum{};
  for (const Spike& s : comb.spikes) {
    const Complex value = comb.kind == CombKind::Position
                              ? probe.position_value(s.location, planck)
                              : probe.momentum_value(s.location, planck);
    sum += std::conj(value) * s.amplitude;
  }
  return sum;
}

DftLemmaCheck check_dft_lemma(const ThetaPoint& theta, const PlanckParameter& planck,
                              std::int64_t truncation) {
  if (truncation < 1) throw ArgumentError("verify_dft_lemma: truncation must be >= 1");
  const std::int64_t n = planck.n();
  const double nd = static_cast<double>(n);
  const double width = std::sqrt(planck.hbar());

  std::vector<DeltaComb> position, momentum;
  for (std::int64_t m = 0; m < n; ++m) {
    position.push_back(build_comb(CombKind::Position, m, theta, planck, truncation));
    momentum.push_back(build_comb(CombKind::Momentum, m, theta, planck, truncation));
  }

  // Rows: probes; columns: basis index.
  const Eigen::Index probes = n * n;
  Eigen::MatrixXcd lhs(probes, n);
  Eigen::MatrixXcd rhs_basis(probes, n);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      const GaussianProbe probe{(a + 0.5) / nd, (b + 0.5) / nd, width};
      const Eigen::Index row = a * n + b;
      for (std::int64_t m = 0; m < n; ++m) {
        lhs(row, m) = comb_pairing(probe, position[m], planck);
        rhs_basis(row, m) = comb_pairing(probe, momentum[m], planck);
      }
    }
  }

  const Complex global = turn(-theta.theta1() * theta.theta2() / nd);
  SectorMatrix expected = global * dft_matrix(n);
  const Eigen::MatrixXcd predicted = rhs_basis * expected.matrix().transpose();
  const double deviation = (lhs - predicted).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd solved = rhs_basis.colPivHouseholderQr().solve(lhs);
  return {deviation, SectorMatrix(Eigen::MatrixXcd(solved.transpose())), std::move(expected)};
}

// ---------------------------------------------------------------------------

Complex kernel_g(double r, double hbar) {
  // sin(r)/r -> 1 - r^2/6 near the removable singularity.
  const double sinc = std::abs(r) < 1e-4 ? 1.0 - r * r / 6.0 : std::sin(r) / r;
  return std::exp(Complex{-hbar * r * r, r}) * sinc / (2.0 * kPi * hbar);
}

Complex diffraction_kernel(double x, double y, const PlanckParameter& planck) {
  return kernel_g((x - y) / (2.0 * planck.hbar()), planck);
}

Complex comb_inner_product(const DeltaComb& c1, const DeltaComb& c2) {
  if (c1.kind != CombKind::Position || c2.kind != CombKind::Position) {
    throw ArgumentError("comb_inner_product: the kernel pairing is defined for position combs");
  }
  require_same_sector(c1.n, c1.theta, c2.n, c2.theta, "comb_inner_product");
  const PlanckParameter planck(c1.n);
  Complex sum{};
  for (const Spike& s1 : c1.spikes) {
    if (s1.location < 0.0 || s1.location >= 1.0) continue;
    for (const Spike& s2 : c2.spikes) {
      sum += std::conj(s1.amplitude) * s2.amplitude *
             diffraction_kernel(s1.location, s2.location, planck);
    }
  }
  return sum;
}

double kernel_fwhm(double hbar) {
  if (!(hbar > 0.0)) throw ArgumentError("kernel_fwhm: hbar must be positive");
  // Relative profile in s = u / (2 hbar); decreasing on [0, pi].
  auto relative = [hbar](double s) {
    const double sinc = s < 1e-8 ? 1.0 : std::sin(s) / s;
    return std::exp(-2.0 * hbar * s * s) * sinc * sinc;
  };
  double lo = 0.0;
  double hi = kPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (relative(mid) > 0.5 ? lo : hi) = mid;
  }
  return 2.0 * (2.0 * hbar) * 0.5 * (lo + hi);
}

std::vector<KernelPlotRow> kernel_plot(double h, bool figure_convention, int points) {
  if (!(h > 0.0)) throw ArgumentError("kernel_plot: h must be positive");
  if (points < 2) throw ArgumentError("kernel_plot: need at least two points");
  const double hbar = figure_convention ? h : h / (2.0 * kPi);
  std::vector<KernelPlotRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const double r = -5.0 + 10.0 * static_cast<double>(j) / static_cast<double>(points - 1);
    rows.push_back({r, std::norm(kernel_g(r / (2.0 * hbar), hbar))});
  }
  return rows;
}

// ---------------------------------------------------------------------------

Complex bargmann_integral(const std::function<Complex(Complex)>& f, const PlanckParameter& planck,
                          int nodes) {
  const QuadratureRule rule = gauss_hermite(nodes);
  const double root = std::sqrt(planck.hbar());
  Complex sum{};
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      sum += rule.weights[i] * rule.weights[j] * f(root * Complex{rule.nodes[i], rule.nodes[j]});
    }
  }
  return sum / kPi;
}

Complex reproducing_kernel_apply(const Wavefunction& psi, Complex z, const PlanckParameter& planck,
                                 int nodes) {
  const double hbar = planck.hbar();
  return bargmann_integral(
      [&](Complex w) { return std::exp(z * std::conj(w) / hbar) * psi(w); }, planck, nodes);
}

Complex monomial_inner_product(int n, int m, const PlanckParameter& planck, int nodes) {
  return bargmann_integral(
      [n, m](Complex w) { return integer_power(std::conj(w), n) * integer_power(w, m); }, planck, nodes);
}

}  // namespace qtorus

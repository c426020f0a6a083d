#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qtorus/planck.hpp"

namespace qtorus {

/// Exponent pair (m, k) of the Weyl monomial W(m, k). (0, 0) is the identity.
struct WeylIndex {
  Integer m;
  Integer k;

  WeylIndex() = default;
  WeylIndex(Integer m_, Integer k_) : m(std::move(m_)), k(std::move(k_)) {}
  WeylIndex(std::int64_t m_, std::int64_t k_) : m(m_), k(k_) {}
  WeylIndex(int m_, int k_) : m(m_), k(k_) {}

  bool is_zero() const { return m == 0 && k == 0; }

  friend bool operator==(const WeylIndex& a, const WeylIndex& b) {
    return a.m == b.m && a.k == b.k;
  }
  friend bool operator!=(const WeylIndex& a, const WeylIndex& b) { return !(a == b); }
  // Lexicographic in (m, k); this is also the serialization order.
  friend bool operator<(const WeylIndex& a, const WeylIndex& b) {
    return a.m < b.m || (a.m == b.m && a.k < b.k);
  }
  friend WeylIndex operator+(const WeylIndex& a, const WeylIndex& b) {
    return {a.m + b.m, a.k + b.k};
  }
  friend WeylIndex operator-(const WeylIndex& a) { return {-a.m, -a.k}; }
};

std::string to_string(const WeylIndex& v);

/// sigma(v, w) = m_v k_w - k_v m_w.
Integer symplectic_form(const WeylIndex& v, const WeylIndex& w);

/// A finite linear combination of symmetrized Weyl monomials
///
///   W(m, k) = e^{-i lambda m k / 2} U^m V^k,     UV = e^{i lambda} VU,
///
/// over one PlanckParameter. Terms are kept in (m, k) order.
class AlgebraElement {
 public:
  using Terms = std::map<WeylIndex, Complex>;

  /// The zero element.
  explicit AlgebraElement(PlanckParameter planck) : planck_(planck) {}
  AlgebraElement(PlanckParameter planck, Terms terms)
      : planck_(planck), terms_(std::move(terms)) {}

  static AlgebraElement identity(PlanckParameter planck);

  const PlanckParameter& planck() const noexcept { return planck_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of W(v); zero when absent.
  Complex coefficient(const WeylIndex& v) const;

  /// Accumulates c into the coefficient of W(v).
  void add_term(const WeylIndex& v, Complex c);

  /// Copy without the terms whose modulus is below threshold.
  AlgebraElement pruned(double threshold) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex scale);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }

  /// Exact coefficient-wise equality (same N, same stored terms).
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.planck_ == b.planck_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_planck(const AlgebraElement& other) const;

  PlanckParameter planck_;
  Terms terms_;
};

/// W(v) with unit coefficient. weyl_monomial({0,0}, p) is the identity.
AlgebraElement weyl_monomial(const WeylIndex& v, PlanckParameter planck);

/// The factor e^{-i lambda m k / 2} with W(m,k) = factor * U^m V^k.
Complex normal_order_factor(const WeylIndex& v, const PlanckParameter& planck);

/// e^{i lambda sigma(v,w)/2}, the structure constant of W(v) W(w).
Complex weyl_product_phase(const WeylIndex& v, const WeylIndex& w,
                           const PlanckParameter& planck);

/// Product in the algebra.
///
/// Monomials multiply as W(v) W(w) = e^{i lambda sigma(v,w)/2} W(v + w).
/// From UV = e^{i lambda} VU we get V^k U^m = e^{-i lambda k m} U^m V^k, so
///
///   W(v) W(w) = e^{-i lambda (m_v k_v + m_w k_w)/2} U^{m_v} V^{k_v} U^{m_w} V^{k_w}
///             = e^{-i lambda (m_v k_v + m_w k_w)/2 - i lambda k_v m_w}
///               U^{m_v + m_w} V^{k_v + k_w}
///
/// and re-expressing U^{m}V^{k} = e^{i lambda m k/2} W(m, k) at m = m_v + m_w,
/// k = k_v + k_w leaves the exponent
///
///   (i lambda / 2)[(m_v+m_w)(k_v+k_w) - m_v k_v - m_w k_w - 2 k_v m_w]
///     = (i lambda / 2)(m_v k_w - k_v m_w) = i lambda sigma(v, w) / 2.
///
/// Throws ParameterMismatch when a and b carry different N.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

/// W(v)^dagger = W(-v); coefficients are conjugated.
AlgebraElement adjoint(const AlgebraElement& a);

/// The tracial state: tau(U^m V^k) = delta_{m0} delta_{k0}, i.e. the
/// coefficient of W(0,0).
Complex trace(const AlgebraElement& a);

/// Koopman inner product (a, b) = tau(a^dagger b). Monomials are orthonormal,
/// so this is sum conj(a_v) b_v over the common support.
Complex inner_product(const AlgebraElement& a, const AlgebraElement& b);

/// sqrt(inner_product(a, a)): the l2 norm of the coefficient map.
double koopman_norm(const AlgebraElement& a);

/// koopman_norm(a - b); throws ParameterMismatch on differing N.
double koopman_distance(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace qtorus

#include "qtorus/weyl_algebra.hpp"

#include <cmath>

#include "qtorus/errors.hpp"

namespace qtorus {

std::string to_string(const WeylIndex& v) {
  return "(" + v.m.str() + "," + v.k.str() + ")";
}

Integer symplectic_form(const WeylIndex& v, const WeylIndex& w) {
  return v.m * w.k - v.k * w.m;
}

AlgebraElement AlgebraElement::identity(PlanckParameter planck) {
  return weyl_monomial(WeylIndex{0, 0}, planck);
}

Complex AlgebraElement::coefficient(const WeylIndex& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Complex{} : it->second;
}

void AlgebraElement::add_term(const WeylIndex& v, Complex c) {
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) it->second += c;
}

AlgebraElement AlgebraElement::pruned(double threshold) const {
  AlgebraElement out(planck_);
  for (const auto& [v, c] : terms_) {
    if (std::abs(c) >= threshold) out.terms_.emplace_hint(out.terms_.end(), v, c);
  }
  return out;
}

void AlgebraElement::require_same_planck(const AlgebraElement& other) const {
  if (!(planck_ == other.planck_)) {
    throw ParameterMismatch("algebra elements built for N=" + std::to_string(planck_.n()) +
                            " and N=" + std::to_string(other.planck_.n()));
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_planck(other);
  for (const auto& [v, c] : other.terms_) add_term(v, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_planck(other);
  for (const auto& [v, c] : other.terms_) add_term(v, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scale) {
  for (auto& [v, c] : terms_) c *= scale;
  return *this;
}

AlgebraElement weyl_monomial(const WeylIndex& v, PlanckParameter planck) {
  AlgebraElement out(planck);
  out.add_term(v, Complex{1.0, 0.0});
  return out;
}

Complex normal_order_factor(const WeylIndex& v, const PlanckParameter& planck) {
  return planck.half_phase(Integer(-(v.m * v.k)));
}

Complex weyl_product_phase(const WeylIndex& v, const WeylIndex& w,
                           const PlanckParameter& planck) {
  return planck.half_phase(symplectic_form(v, w));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.planck() == b.planck())) {
    throw ParameterMismatch("multiply: operands built for N=" + std::to_string(a.planck().n()) +
                            " and N=" + std::to_string(b.planck().n()));
  }
  AlgebraElement out(a.planck());
  for (const auto& [v, cv] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      out.add_term(v + w, cv * cw * weyl_product_phase(v, w, a.planck()));
    }
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement::Terms terms;
  for (const auto& [v, c] : a.terms()) terms.emplace(-v, std::conj(c));
  return AlgebraElement(a.planck(), std::move(terms));
}

Complex trace(const AlgebraElement& a) { return a.coefficient(WeylIndex{0, 0}); }

Complex inner_product(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.planck() == b.planck())) {
    throw ParameterMismatch("inner_product: operands built for N=" +
                            std::to_string(a.planck().n()) + " and N=" +
                            std::to_string(b.planck().n()));
  }
  // Merge walk over the two sorted supports.
  Complex sum{};
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double koopman_norm(const AlgebraElement& a) {
  double sum = 0.0;
  for (const auto& [v, c] : a.terms()) sum += std::norm(c);
  return std::sqrt(sum);
}

double koopman_distance(const AlgebraElement& a, const AlgebraElement& b) {
  return koopman_norm(a - b);
}

}  // namespace qtorus

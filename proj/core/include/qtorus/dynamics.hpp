#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qtorus/symbol.hpp"
#include "qtorus/weyl_algebra.hpp"

namespace qtorus {

/// Integer matrix [[a, b], [c, d]] with ad - bc = 1.
struct CatMap {
  std::int64_t a, b, c, d;
  friend bool operator==(const CatMap&, const CatMap&) = default;
};

/// Rigid translation by (t1, t2), both stored reduced into [0, 1).
struct Kronecker {
  double t1, t2;
  friend bool operator==(const Kronecker&, const Kronecker&) = default;
};

/// A Z-action on the algebra, generated by one toral automorphism.
///
/// The cat matrix A acts on Weyl and Fourier indices, v -> A v. On classical
/// phase-space points this is the map xi -> A^T xi (mod 1): f(A^T xi) carries
/// the mode A v.
class ToralAutomorphism {
 public:
  /// Throws ArgumentError("cat map determinant must be 1") otherwise.
  static ToralAutomorphism cat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static ToralAutomorphism kronecker(double t1, double t2);

  bool is_cat() const noexcept { return std::holds_alternative<CatMap>(kind_); }
  bool is_kronecker() const noexcept { return std::holds_alternative<Kronecker>(kind_); }
  const CatMap& cat_map() const { return std::get<CatMap>(kind_); }
  const Kronecker& shift() const { return std::get<Kronecker>(kind_); }

  /// "cat:a,b,c,d" or "kronecker:t1,t2".
  std::string to_string() const;

  /// Index image under the n-th power (cat maps only; identity for Kronecker).
  WeylIndex map_index(const WeylIndex& v, std::int64_t n) const;

  /// Phase picked up by W(v) under the n-th power (1 for cat maps).
  Complex index_phase(const WeylIndex& v, std::int64_t n) const;

  friend bool operator==(const ToralAutomorphism&, const ToralAutomorphism&) = default;

 private:
  explicit ToralAutomorphism(std::variant<CatMap, Kronecker> kind) : kind_(kind) {}
  std::variant<CatMap, Kronecker> kind_;
};

/// alpha_n(a). Cat: coefficient at v moves to A^n v. Kronecker: the
/// coefficient at v is multiplied by e^{2 pi i n (v . t)}. n may be negative.
AlgebraElement apply_automorphism(const ToralAutomorphism& alpha, const AlgebraElement& a,
                                  std::int64_t n);

/// <a>_M = (1/M) sum_{j=0}^{M-1} alpha_j(a). Throws ArgumentError for M <= 0.
AlgebraElement cesaro_average(const ToralAutomorphism& alpha, const AlgebraElement& a,
                              std::int64_t steps);

/// || <a>_M - tau(a) I || in the Koopman norm.
double ergodicity_defect(const ToralAutomorphism& alpha, const AlgebraElement& a,
                         std::int64_t steps);

/// || alpha_1(<a>_M) - <a>_M ||, bounded by 2||a||/M.
double time_average_drift(const ToralAutomorphism& alpha, const AlgebraElement& a,
                          std::int64_t steps);

/// tau(alpha_n(a) b). Throws ParameterMismatch on differing N.
Complex mixing_correlation(const ToralAutomorphism& alpha, const AlgebraElement& a,
                           const AlgebraElement& b, std::int64_t n);

/// f o T^n as a symbol: modes relabel v -> A^n v (cat) or pick up
/// e^{2 pi i n (v . t)} (Kronecker). The (0,0) mode is untouched.
TorusSymbol classical_pushforward(const TorusSymbol& f, const ToralAutomorphism& alpha,
                                  std::int64_t n);

/// Indices v with |m|, |k| <= degree_bound such that alpha_n(W(v)) = W(v) for
/// some 1 <= n <= n_max. Kronecker invariance is |phase - 1| < 1e-9. The
/// window makes this a finite probe, not a proof of ergodicity.
std::vector<WeylIndex> find_invariant_monomials(const ToralAutomorphism& alpha,
                                                std::int64_t degree_bound, std::int64_t n_max);

/// A diagnostic series, e.g. defect against M or correlation against n.
struct DiagnosticsReport {
  std::vector<std::int64_t> steps;
  std::vector<Complex> values;
  Complex limit_reference{};

  friend bool operator==(const DiagnosticsReport&, const DiagnosticsReport&) = default;
};

/// ergodicity_defect for M = 1..max_steps, computed incrementally.
/// The reference is 0, the limit predicted for ergodic dynamics.
DiagnosticsReport ergodicity_sweep(const ToralAutomorphism& alpha, const AlgebraElement& a,
                                   std::int64_t max_steps);

/// mixing_correlation for n = 1..steps; reference tau(a) tau(b).
DiagnosticsReport mixing_sweep(const ToralAutomorphism& alpha, const AlgebraElement& a,
                               const AlgebraElement& b, std::int64_t steps);

}  // namespace qtorus

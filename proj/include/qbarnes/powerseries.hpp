#pragma once

// Truncated power series sum_{n<=M} c_n t^n with exact rational coefficients.
// Coefficients are stored plain; the Taylor convention n! * c_n is applied
// only when a polynomial value is extracted.

#include <vector>

#include "qbarnes/numeric.hpp"

namespace qbarnes {

inline constexpr int kDefaultOrderBudget = 64;

class FormalSeries {
 public:
  explicit FormalSeries(int order);
  explicit FormalSeries(std::vector<Rational> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  Rational& operator[](int n) { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// n! * [t^n], the coefficient in the exponential (t^n/n!) convention.
  Rational taylor_coefficient(int n) const;

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to min(order(a), order(b)).
FormalSeries ps_product(const FormalSeries& a, const FormalSeries& b);
FormalSeries ps_sum(const FormalSeries& a, const FormalSeries& b);
FormalSeries ps_scale(const FormalSeries& a, const Rational& c);
/// Multiplicative inverse; throws ZeroConstantTerm when c_0 = 0.
FormalSeries ps_reciprocal(const FormalSeries& a);
/// e^{ct} truncated at order M.
FormalSeries exp_series(const Rational& c, int order);

/// 2^r e^{xt} / prod_j (e^{w_j t} + 1), exponential generating function of
/// the multiple Euler polynomials E_n^{(r)}(x | w).
FormalSeries euler_multi_series(const Rational& x, const std::vector<Rational>& w, int order);
/// t^r e^{xt} / prod_j (e^{a_j t} - 1), exponential generating function of
/// the Barnes multiple Bernoulli polynomials B_n(x, r | a).
FormalSeries barnes_bernoulli_series(const Rational& x, const std::vector<Rational>& a, int order);

Rational euler_multi_classical(int n, const Rational& x, const std::vector<Rational>& w,
                               int budget = kDefaultOrderBudget);
Rational barnes_bernoulli(int n, const Rational& x, const std::vector<Rational>& a,
                          int budget = kDefaultOrderBudget);

Rational factorial(int n);
BigInt binomial(int n, int k);

}  // namespace qbarnes

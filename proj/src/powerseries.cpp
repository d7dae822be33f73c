#include "qbarnes/powerseries.hpp"

#include <algorithm>
#include <string>

#include "qbarnes/error.hpp"

namespace qbarnes {

FormalSeries::FormalSeries(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidParameter, "series order must be >= 0");
  coeffs_.assign(order + 1, Rational(0));
}

FormalSeries::FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidParameter, "series needs at least one coefficient");
}

Rational FormalSeries::taylor_coefficient(int n) const {
  if (n < 0 || n > order())
    throw Error(ErrorKind::OrderBudgetExceeded,
                "degree " + std::to_string(n) + " beyond series order " + std::to_string(order()));
  return factorial(n) * coeffs_[n];
}

Rational factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

FormalSeries ps_product(const FormalSeries& a, const FormalSeries& b) {
  const int m = std::min(a.order(), b.order());
  FormalSeries c(m);
  for (int i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

FormalSeries ps_sum(const FormalSeries& a, const FormalSeries& b) {
  const int m = std::min(a.order(), b.order());
  FormalSeries c(m);
  for (int i = 0; i <= m; ++i) c[i] = a[i] + b[i];
  return c;
}

FormalSeries ps_scale(const FormalSeries& a, const Rational& s) {
  FormalSeries c(a.order());
  for (int i = 0; i <= a.order(); ++i) c[i] = a[i] * s;
  return c;
}

FormalSeries ps_reciprocal(const FormalSeries& a) {
  if (a[0] == 0) throw Error(ErrorKind::ZeroConstantTerm, "reciprocal of a series with zero constant term");
  const int m = a.order();
  FormalSeries b(m);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -acc * inv0;
  }
  return b;
}

FormalSeries exp_series(const Rational& c, int order) {
  FormalSeries e(order);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) e[n] = e[n - 1] * c / n;
  return e;
}

FormalSeries euler_multi_series(const Rational& x, const std::vector<Rational>& w, int order) {
  FormalSeries denom(order);
  denom[0] = 1;
  for (const auto& wj : w) {
    FormalSeries factor = exp_series(wj, order);
    factor[0] += 1;
    denom = ps_product(denom, factor);
  }
  Rational scale = 1;
  for (std::size_t j = 0; j < w.size(); ++j) scale *= 2;
  return ps_scale(ps_product(exp_series(x, order), ps_reciprocal(denom)), scale);
}

FormalSeries barnes_bernoulli_series(const Rational& x, const std::vector<Rational>& a, int order) {
  FormalSeries denom(order);
  denom[0] = 1;
  for (const auto& aj : a) {
    if (aj <= 0) throw Error(ErrorKind::InvalidParameter, "Barnes parameters must be positive");
    // (e^{a t} - 1)/t = sum_k a^{k+1} t^k / (k+1)!
    FormalSeries factor(order);
    Rational term = aj;
    for (int k = 0; k <= order; ++k) {
      factor[k] = term;
      term = term * aj / (k + 2);
    }
    denom = ps_product(denom, factor);
  }
  return ps_product(exp_series(x, order), ps_reciprocal(denom));
}

namespace {
void check_budget(int n, int budget) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "degree must be >= 0");
  if (n > budget)
    throw Error(ErrorKind::OrderBudgetExceeded,
                "degree " + std::to_string(n) + " exceeds order budget " + std::to_string(budget));
}
}  // namespace

Rational euler_multi_classical(int n, const Rational& x, const std::vector<Rational>& w, int budget) {
  check_budget(n, budget);
  if (w.empty()) throw Error(ErrorKind::InvalidParameter, "multiple Euler polynomials need r >= 1");
  return euler_multi_series(x, w, n).taylor_coefficient(n);
}

Rational barnes_bernoulli(int n, const Rational& x, const std::vector<Rational>& a, int budget) {
  check_budget(n, budget);
  return barnes_bernoulli_series(x, a, n).taylor_coefficient(n);
}

}  // namespace qbarnes

#include "qbarnes/qcore.hpp"

#include <cmath>

namespace qbarnes {

ComplexQ::ComplexQ(Complex value, int digits) : value_(value), digits_(digits) {
  if (!(std::abs(value) < 1.0))
    throw Error(ErrorKind::InvalidParameter, "deformation parameter must satisfy |q| < 1");
  if (digits < 15) throw Error(ErrorKind::InvalidParameter, "precision must be at least 15 digits");
}

Complex q_power(const ComplexQ& q, Complex x) {
  if (x == Complex(0.0)) return 1.0;
  if (q.value() == Complex(0.0)) return 0.0;
  if (q.real_mode() && x.imag() == 0.0) return std::pow(q.value().real(), x.real());
  return std::exp(x * std::log(q.value()));
}

Complex q_bracket(Complex x, const ComplexQ& q, BracketSign sign) {
  if (sign == BracketSign::plus) return (1.0 - q_power(q, x)) / (1.0 - q.value());
  Complex mq = -q.value();
  Complex power = (x == Complex(0.0)) ? Complex(1.0) : std::exp(x * std::log(mq));
  if (x.imag() == 0.0 && std::trunc(x.real()) == x.real())
    power = int_pow(mq, static_cast<long long>(x.real()));
  return (1.0 - power) / (1.0 + q.value());
}

Complex q_factorial(int n, const ComplexQ& q) { return q_factorial_t<Complex>(n, q.value()); }

Complex q_binomial(int n, int k, const ComplexQ& q) { return q_binomial_t<Complex>(n, k, q.value()); }

Complex q_pochhammer(Complex b, const ComplexQ& q, int n) { return q_pochhammer_t<Complex>(b, q.value(), n); }

Complex q_binomial_theorem_sum(Complex b, const ComplexQ& q, int n) {
  return q_binomial_theorem_sum_t<Complex>(b, q.value(), n);
}

ReciprocalSeries q_pochhammer_reciprocal_series(Complex b, const ComplexQ& q, int n, double tol) {
  const double rb = std::abs(b);
  if (!(rb < 1.0)) throw Error(ErrorKind::InvalidParameter, "reciprocal q-binomial series needs |b| < 1");
  if (n == 0) return {Complex(1.0), 1, 0.0};
  // |C(n+i-1,i)_q| <= prod_{k=1}^{n-1} 1/(1-|q|^k) uniformly in i.
  double coeffBound = 1.0;
  for (int k = 1; k < n; ++k) coeffBound /= 1.0 - std::pow(std::abs(q.value()), k);

  const Complex qv = q.value();
  ReciprocalSeries out;
  Complex bi = 1.0;
  // C(n+i-1, i)_q = prod_{j=1}^{i} (1 - q^{n+j-1}) / (1 - q^j), updated multiplicatively.
  Complex coeff = 1.0;
  for (int i = 0;; ++i) {
    if (i > 0) coeff *= (1.0 - int_pow(qv, n + i - 1)) / (1.0 - int_pow(qv, i));
    out.value += coeff * bi;
    bi *= b;
    out.terms = i + 1;
    out.tailBound = coeffBound * std::pow(rb, i + 1) / (1.0 - rb);
    if (out.tailBound < tol) break;
    if (i > 100000) throw Error(ErrorKind::NoConvergence, "reciprocal q-binomial series");
  }
  return out;
}

}  // namespace qbarnes

#pragma once

// q-numbers, q-factorials, Gaussian binomials and q-Pochhammer symbols.
//
// Every routine exists in two flavours: a complex-double one taking a
// validated ComplexQ, and a generic template usable with Rational,
// ExtComplex or Complex scalars.  Exponents in the generic flavour are
// integers; complex exponents use the principal logarithm.

#include <vector>

#include "qbarnes/error.hpp"
#include "qbarnes/numeric.hpp"

namespace qbarnes {

enum class BracketSign { plus, minus };

/// Deformation parameter q with |q| < 1 and q != 1.  Real mode means
/// q in (0, 1), where every closed-form denominator is nonzero.
class ComplexQ {
 public:
  explicit ComplexQ(Complex value, int digits = 15);

  Complex value() const noexcept { return value_; }
  int digits() const noexcept { return digits_; }
  bool real_mode() const noexcept { return value_.imag() == 0.0 && value_.real() > 0.0; }
  bool extended() const noexcept { return digits_ > 17; }

 private:
  Complex value_;
  int digits_;
};

/// q^x with the principal branch of log q.
Complex q_power(const ComplexQ& q, Complex x);

Complex q_bracket(Complex x, const ComplexQ& q, BracketSign sign = BracketSign::plus);
Complex q_factorial(int n, const ComplexQ& q);
Complex q_binomial(int n, int k, const ComplexQ& q);
Complex q_pochhammer(Complex b, const ComplexQ& q, int n);

/// Right-hand side of the finite q-binomial theorem,
/// sum_i C(n,i)_q q^{i(i-1)/2} (-b)^i.
Complex q_binomial_theorem_sum(Complex b, const ComplexQ& q, int n);

struct ReciprocalSeries {
  Complex value;
  int terms = 0;
  double tailBound = 0.0;
};

/// 1/(b;q)_n as the power series sum_i C(n+i-1,i)_q b^i, truncated once the
/// geometric tail bound drops below tol.  Requires |b| < 1.
ReciprocalSeries q_pochhammer_reciprocal_series(Complex b, const ComplexQ& q, int n, double tol = 1e-14);

// ---------------------------------------------------------------------------
// Generic scalar versions.

template <class T>
T q_bracket_t(long long x, const T& q, BracketSign sign = BracketSign::plus) {
  if (sign == BracketSign::plus) {
    if (q == T(1)) throw Error(ErrorKind::InvalidParameter, "q-bracket needs q != 1");
    return (T(1) - int_pow(q, x)) / (T(1) - q);
  }
  if (q == T(-1)) throw Error(ErrorKind::InvalidParameter, "minus q-bracket needs q != -1");
  return (T(1) - int_pow(T(-q), x)) / (T(1) + q);
}

template <class T>
T q_factorial_t(int n, const T& q) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "q-factorial of negative n");
  T result(1);
  for (int k = 2; k <= n; ++k) result *= q_bracket_t<T>(k, q);
  return result;
}

/// [n]_q [n-1]_q ... [n-k+1]_q / [k]_q!, zero outside 0 <= k <= n.
template <class T>
T q_binomial_t(int n, int k, const T& q) {
  if (n < 0 || k < 0 || k > n) return T(0);
  if (k > n - k) k = n - k;
  T num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= q_bracket_t<T>(n - i, q);
    den *= q_bracket_t<T>(i + 1, q);
  }
  return num / den;
}

template <class T>
T q_pochhammer_t(const T& b, const T& q, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "q-Pochhammer length must be >= 0");
  T result(1), qk(1);
  for (int k = 0; k < n; ++k) {
    result *= T(1) - b * qk;
    qk *= q;
  }
  return result;
}

template <class T>
T q_binomial_theorem_sum_t(const T& b, const T& q, int n) {
  T sum(0), bi(1);
  for (int i = 0; i <= n; ++i) {
    T term = q_binomial_t<T>(n, i, q) * int_pow(q, static_cast<long long>(i) * (i - 1) / 2) * bi;
    sum += (i % 2 == 0) ? term : T(-term);
    bi *= b;
  }
  return sum;
}

/// Gaussian binomial via the Pascal-type recurrence; independent of the
/// q-factorial quotient above, used to cross-check it.
template <class T>
std::vector<std::vector<T>> q_binomial_table(int nmax, const T& q) {
  std::vector<std::vector<T>> table(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    table[n].assign(n + 1, T(1));
    for (int k = 1; k < n; ++k) table[n][k] = table[n - 1][k - 1] + int_pow(q, k) * table[n - 1][k];
  }
  return table;
}

}  // namespace qbarnes

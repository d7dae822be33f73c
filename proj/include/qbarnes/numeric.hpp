#pragma once

#include <complex>
#include <cstdint>

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace qbarnes {

using Complex = std::complex<double>;
using LongComplex = std::complex<long double>;
/// 50 significant decimal digits; used where closed forms stack cancellations.
using ExtComplex = boost::multiprecision::cpp_complex_50;
using ExtReal = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// base^e for integer e (negative allowed when base is invertible); 0^0 = 1.
template <class T>
T int_pow(T base, long long e) {
  if (e < 0) {
    base = T(1) / base;
    e = -e;
  }
  T result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace qbarnes

#pragma once

// Fixed-precision p-adic integers: a residue modulo p^K with its valuation.
// Only p-adic integers are represented; moduli are limited to p^K < 2^62.

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "qbarnes/error.hpp"
#include "qbarnes/numeric.hpp"

namespace qbarnes {

/// Modular arithmetic modulo a fixed m < 2^62.  Products use a Barrett
/// reduction when m < 2^32 and 128-bit division otherwise.
class ModArith {
 public:
  explicit ModArith(std::uint64_t m);

  std::uint64_t modulus() const noexcept { return m_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + m_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : m_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) {
      const std::uint64_t x = a * b;
      const auto quot = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
      std::uint64_t r = x - quot * m_;
      return r >= m_ ? r - m_ : r;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Reduces a signed integer.
  std::uint64_t from_signed(long long v) const noexcept;

 private:
  std::uint64_t m_;
  std::uint64_t barrett_ = 0;
  bool small_ = false;
};

inline constexpr int kInfiniteValuation = INT_MAX;

class PadicNum {
 public:
  PadicNum(std::uint64_t p, int precision, long long value = 0);
  /// Reduction of a p-integral rational; throws InvalidParameter otherwise.
  static PadicNum from_rational(std::uint64_t p, int precision, const Rational& value);
  static PadicNum from_residue(std::uint64_t p, int precision, std::uint64_t residue);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return K_; }
  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// v_p of the residue; kInfiniteValuation when the residue is zero.
  int valuation() const noexcept { return valuation_; }
  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_unit() const noexcept { return valuation_ == 0; }
  /// |x|_p = p^{-v}; zero for the zero residue.
  double norm() const;
  /// Base-p digits, least significant first, exactly K of them.
  std::vector<int> digits() const;
  std::string to_string() const;

  /// Same number known to a lower precision.
  PadicNum reduced(int precision) const;

  PadicNum operator+(const PadicNum& other) const;
  PadicNum operator-(const PadicNum& other) const;
  PadicNum operator*(const PadicNum& other) const;
  PadicNum operator-() const;
  PadicNum& operator+=(const PadicNum& other) { return *this = *this + other; }
  PadicNum& operator-=(const PadicNum& other) { return *this = *this - other; }
  PadicNum& operator*=(const PadicNum& other) { return *this = *this * other; }
  /// Inverse of a unit; throws NonUnitInverse when v_p > 0.
  PadicNum inverse() const;
  PadicNum pow(long long e) const;

  bool operator==(const PadicNum& other) const noexcept {
    return p_ == other.p_ && K_ == other.K_ && residue_ == other.residue_;
  }

 private:
  void set_residue(std::uint64_t r);
  void check_compatible(const PadicNum& other) const;

  std::uint64_t p_;
  int K_;
  std::uint64_t modulus_;
  std::uint64_t residue_ = 0;
  int valuation_ = kInfiniteValuation;
};

std::uint64_t checked_prime_power(std::uint64_t p, int K);
int p_valuation(const BigInt& n, std::uint64_t p);

enum class PadicOp { add, mul, neg, inv };

/// Dispatcher over the four field operations; b is ignored for neg and inv.
PadicNum padic_arith(PadicOp op, const PadicNum& a, const PadicNum& b);

/// q^x = sum_k C(x,k) (q-1)^k for v_p(q-1) >= 1, truncated once v_p((q-1)^k) >= K.
PadicNum padic_qpow(const PadicNum& q, const PadicNum& x);
/// [x]_q = sum_{k>=1} C(x,k) (q-1)^{k-1}, the p-adic continuation of (1-q^x)/(1-q).
PadicNum padic_qbracket(const PadicNum& q, const PadicNum& x);
/// [y]_q = 1 + q + ... + q^{y-1} for an integer y >= 0 (negative y via -q^y [-y]_q).
PadicNum padic_qbracket_int(const PadicNum& q, long long y);

void require_padic_q(const PadicNum& q);

}  // namespace qbarnes

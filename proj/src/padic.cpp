#include "qbarnes/padic.hpp"

#include <cmath>

namespace qbarnes {

ModArith::ModArith(std::uint64_t m) : m_(m) {
  if (m == 0 || m >= (1ULL << 62)) throw Error(ErrorKind::InvalidParameter, "modulus out of range");
  small_ = m < (1ULL << 32);
  if (small_) barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / m);
}

std::uint64_t ModArith::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % m_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t ModArith::from_signed(long long v) const noexcept {
  const auto m = static_cast<long long>(m_);
  long long r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t checked_prime_power(std::uint64_t p, int K) {
  if (p < 3 || p % 2 == 0) throw Error(ErrorKind::InvalidParameter, "p must be an odd prime");
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw Error(ErrorKind::InvalidParameter, std::to_string(p) + " is not prime");
  if (K < 1) throw Error(ErrorKind::InvalidParameter, "p-adic precision must be >= 1");
  unsigned __int128 m = 1;
  for (int i = 0; i < K; ++i) {
    m *= p;
    if (m >= (static_cast<unsigned __int128>(1) << 62))
      throw Error(ErrorKind::InvalidParameter, "p^K must stay below 2^62");
  }
  return static_cast<std::uint64_t>(m);
}

int p_valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) return kInfiniteValuation;
  BigInt v = abs(n);
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

PadicNum::PadicNum(std::uint64_t p, int precision, long long value)
    : p_(p), K_(precision), modulus_(checked_prime_power(p, precision)) {
  set_residue(ModArith(modulus_).from_signed(value));
}

PadicNum PadicNum::from_residue(std::uint64_t p, int precision, std::uint64_t residue) {
  PadicNum x(p, precision);
  x.set_residue(residue % x.modulus_);
  return x;
}

PadicNum PadicNum::from_rational(std::uint64_t p, int precision, const Rational& value) {
  PadicNum x(p, precision);
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (p_valuation(den, p) > 0)
    throw Error(ErrorKind::InvalidParameter, "rational is not a p-adic integer for p = " + std::to_string(p));
  const BigInt m(x.modulus_);
  BigInt n = num % m;
  if (n < 0) n += m;
  BigInt d = den % m;
  PadicNum pn = from_residue(p, precision, static_cast<std::uint64_t>(n));
  PadicNum pd = from_residue(p, precision, static_cast<std::uint64_t>(d));
  return pn * pd.inverse();
}

void PadicNum::set_residue(std::uint64_t r) {
  residue_ = r;
  if (r == 0) {
    valuation_ = kInfiniteValuation;
    return;
  }
  int v = 0;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  valuation_ = v;
}

void PadicNum::check_compatible(const PadicNum& other) const {
  if (p_ != other.p_) throw Error(ErrorKind::InvalidParameter, "p-adic numbers over different primes");
}

double PadicNum::norm() const { return is_zero() ? 0.0 : std::pow(static_cast<double>(p_), -valuation_); }

std::vector<int> PadicNum::digits() const {
  std::vector<int> out(K_);
  std::uint64_t r = residue_;
  for (int i = 0; i < K_; ++i) {
    out[i] = static_cast<int>(r % p_);
    r /= p_;
  }
  return out;
}

std::string PadicNum::to_string() const {
  return std::to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(K_);
}

PadicNum PadicNum::reduced(int precision) const {
  if (precision > K_) throw Error(ErrorKind::InvalidParameter, "cannot raise p-adic precision");
  PadicNum x(p_, precision);
  x.set_residue(residue_ % x.modulus_);
  return x;
}

PadicNum PadicNum::operator+(const PadicNum& other) const {
  check_compatible(other);
  if (other.K_ < K_) return reduced(other.K_) + other;
  if (K_ < other.K_) return *this + other.reduced(K_);
  PadicNum x(*this);
  x.set_residue(ModArith(modulus_).add(residue_, other.residue_));
  return x;
}

PadicNum PadicNum::operator-(const PadicNum& other) const { return *this + (-other); }

PadicNum PadicNum::operator*(const PadicNum& other) const {
  check_compatible(other);
  if (other.K_ < K_) return reduced(other.K_) * other;
  if (K_ < other.K_) return *this * other.reduced(K_);
  PadicNum x(*this);
  x.set_residue(ModArith(modulus_).mul(residue_, other.residue_));
  return x;
}

PadicNum PadicNum::operator-() const {
  PadicNum x(*this);
  x.set_residue(residue_ == 0 ? 0 : modulus_ - residue_);
  return x;
}

PadicNum PadicNum::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NonUnitInverse, "inverse of non-unit " + to_string());
  // Extended Euclid on (residue, p^K).
  __int128 r0 = modulus_, r1 = residue_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 qt = r0 / r1;
    const __int128 r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - qt * s1;
    s0 = s1;
    s1 = s2;
  }
  __int128 inv = s0 % static_cast<__int128>(modulus_);
  if (inv < 0) inv += modulus_;
  return from_residue(p_, K_, static_cast<std::uint64_t>(inv));
}

PadicNum PadicNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return from_residue(p_, K_, ModArith(modulus_).pow(residue_, static_cast<std::uint64_t>(e)));
}

PadicNum padic_arith(PadicOp op, const PadicNum& a, const PadicNum& b) {
  switch (op) {
    case PadicOp::add: return a + b;
    case PadicOp::mul: return a * b;
    case PadicOp::neg: return -a;
    case PadicOp::inv: return a.inverse();
  }
  return a;
}

void require_padic_q(const PadicNum& q) {
  const PadicNum one(q.prime(), q.precision(), 1);
  if ((q - one).valuation() < 1)
    throw Error(ErrorKind::InvalidParameter, "p-adic q needs |1 - q|_p < 1, got q = " + q.to_string());
}

namespace {

// Sum over k >= kStart of C(x,k) (q-1)^{k-shift}, where x is represented by its
// integer residue.  C(xrep,k) is an exact integer, and the truncation below
// leaves the result mod p^K independent of the lift of x.
PadicNum binomial_series(const PadicNum& q, const PadicNum& x, int kStart, int shift) {
  require_padic_q(q);
  const std::uint64_t p = q.prime();
  const int K = std::min(q.precision(), x.precision());
  const PadicNum qm1 = (q - PadicNum(p, q.precision(), 1)).reduced(K);
  const int v = qm1.valuation();
  const BigInt mod(checked_prime_power(p, K));
  const BigInt xrep(x.residue());

  PadicNum sum(p, K);
  BigInt binom = 1;  // C(xrep, k)
  for (int k = 0;; ++k) {
    if (k > 0) binom = binom * (xrep - (k - 1)) / k;
    if (k >= kStart) {
      const long long e = k - shift;
      if (v == kInfiniteValuation) {
        if (e == 0) {
          BigInt b = binom % mod;
          sum += PadicNum::from_residue(p, K, static_cast<std::uint64_t>(b));
        }
        if (e >= 0 && k > kStart) break;
      } else {
        if (static_cast<long long>(v) * e >= K) break;
        BigInt b = binom % mod;
        sum += PadicNum::from_residue(p, K, static_cast<std::uint64_t>(b)) * qm1.pow(e);
      }
    }
    if (binom == 0 && k >= kStart) break;
  }
  return sum;
}

}  // namespace

PadicNum padic_qpow(const PadicNum& q, const PadicNum& x) { return binomial_series(q, x, 0, 0); }

PadicNum padic_qbracket(const PadicNum& q, const PadicNum& x) { return binomial_series(q, x, 1, 1); }

PadicNum padic_qbracket_int(const PadicNum& q, long long y) {
  if (y < 0) return -(q.pow(y) * padic_qbracket_int(q, -y));
  PadicNum sum(q.prime(), q.precision());
  PadicNum qi(q.prime(), q.precision(), 1);
  for (long long i = 0; i < y; ++i) {
    sum += qi;
    qi *= q;
  }
  return sum;
}

}  // namespace qbarnes

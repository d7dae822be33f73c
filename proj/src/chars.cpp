#include "qbarnes/chars.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qbarnes {

namespace {

constexpr double kCharTol = 1e-9;

long long mulmod(long long a, long long b, long long m) { return (a * b) % m; }

int multiplicative_order(long long g, long long f) {
  long long x = g % f;
  int k = 1;
  while (x != 1 % f) {
    x = mulmod(x, g, f);
    ++k;
  }
  return k;
}

std::vector<std::pair<int, int>> factor(int f) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= f; ++p) {
    if (f % p) continue;
    int e = 0;
    while (f % p == 0) {
      f /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (f > 1) out.emplace_back(f, 1);
  return out;
}

void check_modulus(int f) {
  if (f < 1) throw Error(ErrorKind::InvalidParameter, "character modulus must be >= 1");
  if (f % 2 == 0) throw Error(ErrorKind::EvenModulus, "character modulus must be odd, got " + std::to_string(f));
}

}  // namespace

std::vector<DirichletChar> characters_mod(int f) {
  check_modulus(f);
  if (f > 10000) throw Error(ErrorKind::InvalidParameter, "character modulus limited to 10^4");

  // Cyclic factors of (Z/f)^*, one per prime power p^e || f.  The generator of
  // each factor is the smallest u = 1 mod f/p^e whose order is phi(p^e).
  struct Factor {
    long long generator;
    int size;
  };
  std::vector<Factor> factors;
  for (auto [p, e] : factor(f)) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const int phi = pe / p * (p - 1);
    const int cofactor = f / pe;
    for (long long u = 1 + cofactor; u < f; u += cofactor) {
      if (std::gcd(u, static_cast<long long>(f)) != 1) continue;
      if (multiplicative_order(u, f) == phi) {
        factors.push_back({u, phi});
        break;
      }
    }
  }

  // Discrete logs of every unit with respect to the generators.
  const std::size_t s = factors.size();
  std::vector<std::vector<int>> logs(f, std::vector<int>(s, -1));
  std::vector<int> digits(s, 0);
  for (bool more = true; more;) {
    long long m = 1 % f;
    for (std::size_t i = 0; i < s; ++i)
      for (int k = 0; k < digits[i]; ++k) m = mulmod(m, factors[i].generator, f);
    logs[m] = digits;
    more = false;
    for (std::size_t i = s; i-- > 0;) {
      if (++digits[i] < factors[i].size) {
        more = true;
        break;
      }
      digits[i] = 0;
    }
  }

  int base = 1;
  for (const auto& fac : factors) base = std::lcm(base, fac.size);

  std::vector<DirichletChar> chars;
  std::vector<int> j(s, 0);
  int index = 0;
  while (true) {
    DirichletChar chi;
    chi.modulus_ = f;
    chi.index_ = index++;
    chi.exponentBase_ = base;
    chi.values_.assign(f, Complex(0.0));
    chi.exponents_.assign(f, -1);
    int order = 1;
    for (std::size_t i = 0; i < s; ++i) order = std::lcm(order, factors[i].size / std::gcd(factors[i].size, j[i]));
    chi.order_ = order;
    for (int m = 0; m < f; ++m) {
      if (std::gcd(m, f) != 1) continue;
      long long e = 0;
      for (std::size_t i = 0; i < s; ++i) e += static_cast<long long>(j[i]) * logs[m][i] * (base / factors[i].size);
      e %= base;
      chi.exponents_[m] = static_cast<int>(e);
      chi.values_[m] = chi.value_as<Complex>(m);
    }
    chars.push_back(std::move(chi));

    std::size_t i = s;
    bool done = true;
    while (i > 0) {
      --i;
      if (++j[i] < factors[i].size) {
        done = false;
        break;
      }
      j[i] = 0;
    }
    if (done) break;
  }
  return chars;
}

DirichletChar character(int f, int index) {
  auto all = characters_mod(f);
  if (index < 0 || index >= static_cast<int>(all.size()))
    throw Error(ErrorKind::InvalidParameter,
                "character index " + std::to_string(index) + " out of range for modulus " + std::to_string(f));
  return all[index];
}

DirichletChar DirichletChar::from_values(const std::vector<Complex>& values) {
  const int f = static_cast<int>(values.size());
  check_modulus(f);
  for (int m = 0; m < f; ++m) {
    const bool unit = std::gcd(m, f) == 1;
    const double mag = std::abs(values[m]);
    if (unit && std::abs(mag - 1.0) > kCharTol)
      throw Error(ErrorKind::InvalidParameter, "character value at unit " + std::to_string(m) + " is not a root of unity");
    if (!unit && mag > kCharTol)
      throw Error(ErrorKind::InvalidParameter, "character must vanish at non-unit " + std::to_string(m));
  }
  if (std::abs(values[1 % f] - 1.0) > kCharTol) throw Error(ErrorKind::InvalidParameter, "character needs chi(1) = 1");
  for (int a = 1; a < f; ++a)
    for (int b = 1; b < f; ++b)
      if (std::abs(values[a] * values[b] - values[(a * b) % f]) > kCharTol)
        throw Error(ErrorKind::InvalidParameter, "character values are not multiplicative");

  // Recover the exact exponent table: the order divides phi(f).
  int phi = 0;
  for (int m = 0; m < f; ++m) phi += std::gcd(m, f) == 1;
  int order = 1;
  for (; order <= phi; ++order) {
    if (phi % order) continue;
    bool ok = true;
    for (int m = 0; m < f && ok; ++m)
      if (std::gcd(m, f) == 1) ok = std::abs(std::pow(values[m], order) - 1.0) < 1e-7;
    if (ok) break;
  }

  DirichletChar chi;
  chi.modulus_ = f;
  chi.order_ = order;
  chi.exponentBase_ = order;
  chi.values_.assign(f, Complex(0.0));
  chi.exponents_.assign(f, -1);
  for (int m = 0; m < f; ++m) {
    if (std::gcd(m, f) != 1) continue;
    const double turns = std::arg(values[m]) / (2.0 * M_PI);
    long long e = std::llround(turns * order) % order;
    if (e < 0) e += order;
    chi.exponents_[m] = static_cast<int>(e);
    chi.values_[m] = chi.value_as<Complex>(m);
  }
  return chi;
}

int DirichletChar::real_value(long long m) const {
  if (!is_real()) throw Error(ErrorKind::InvalidParameter, "character of order " + std::to_string(order_) + " is not real");
  const int e = exponent(m);
  if (e < 0) return 0;
  return e == 0 ? 1 : -1;
}

int DirichletChar::conductor() const {
  const int f = modulus_;
  for (int d = 1; d <= f; ++d) {
    if (f % d) continue;
    // chi is induced from modulus d iff chi(m) = 1 for every unit m = 1 mod d.
    bool induced = true;
    for (int m = 1; m < f && induced; m += d)
      if (std::gcd(m, f) == 1 && exponents_[m] != 0) induced = false;
    if (induced) return d;
  }
  return f;
}

Complex char_eval(const DirichletChar& chi, long long m) { return chi(m); }

}  // namespace qbarnes

#pragma once

// Dirichlet characters of odd modulus, stored as full value tables.
//
// Besides the complex values, each character keeps an exact exponent table:
// chi(m) = exp(2 pi i * exponent(m) / exponent_base()), or exponent -1 where
// chi(m) = 0.  Higher-precision backends rebuild the roots of unity from it.

#include <vector>

#include <boost/math/constants/constants.hpp>

#include "qbarnes/error.hpp"
#include "qbarnes/numeric.hpp"

namespace qbarnes {

class DirichletChar {
 public:
  /// Validates and wraps an explicit value table of length f (odd).
  static DirichletChar from_values(const std::vector<Complex>& values);

  int modulus() const noexcept { return modulus_; }
  int order() const noexcept { return order_; }
  /// Position in the deterministic enumeration of characters_mod, or -1 for
  /// characters built from explicit values.
  int index() const noexcept { return index_; }

  Complex operator()(long long m) const { return values_[reduce(m)]; }
  int exponent(long long m) const { return exponents_[reduce(m)]; }
  int exponent_base() const noexcept { return exponentBase_; }

  bool is_trivial() const noexcept { return order_ == 1; }
  /// Values restricted to {-1, 0, 1}.
  bool is_real() const noexcept { return order_ <= 2; }
  /// Integer value for real characters; throws for complex ones.
  int real_value(long long m) const;
  /// Smallest d | f such that chi is induced from a character mod d.
  int conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }

  /// chi(m) in any complex scalar type constructible from (re, im) and
  /// supporting cos/sin at its own precision.
  template <class C>
  C value_as(long long m) const;

  const std::vector<Complex>& values() const noexcept { return values_; }

 private:
  friend std::vector<DirichletChar> characters_mod(int f);
  DirichletChar() = default;

  std::size_t reduce(long long m) const {
    long long r = m % modulus_;
    if (r < 0) r += modulus_;
    return static_cast<std::size_t>(r);
  }

  int modulus_ = 1;
  int order_ = 1;
  int index_ = -1;
  int exponentBase_ = 1;
  std::vector<Complex> values_;
  std::vector<int> exponents_;
};

/// All phi(f) characters mod an odd f <= 10^4, in lexicographic order of the
/// exponent tuples over the cyclic factors of (Z/f)^* (index 0 is trivial).
std::vector<DirichletChar> characters_mod(int f);

DirichletChar character(int f, int index);

Complex char_eval(const DirichletChar& chi, long long m);

template <class C>
C DirichletChar::value_as(long long m) const {
  const int e = exponent(m);
  if (e < 0) return C(0);
  if (e == 0) return C(1);
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  using std::cos;
  using std::sin;
  // Exact quarter turns keep +-1 and +-i free of rounding.
  if (4LL * e % exponentBase_ == 0) {
    switch (4LL * e / exponentBase_) {
      case 1: return C(0, 1);
      case 2: return C(-1);
      case 3: return C(0, -1);
      default: break;
    }
  }
  using Real = decltype(std::declval<C>().real());
  const Real angle = 2 * boost::math::constants::pi<Real>() * Real(e) / Real(exponentBase_);
  return C(cos(angle), sin(angle));
}

}  // namespace qbarnes

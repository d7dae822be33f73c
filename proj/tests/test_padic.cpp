#include <doctest.h>

#include "qbarnes/error.hpp"
#include "qbarnes/fermionic.hpp"
#include "qbarnes/padic.hpp"

using namespace qbarnes;

TEST_CASE("inverse and valuation mod 3^4") {
  const PadicNum two(3, 4, 2);
  CHECK(two.inverse().residue() == 41);
  CHECK(PadicNum(3, 4, 18).valuation() == 2);
  CHECK(PadicNum::from_rational(3, 4, make_rational(1, 2)) == two.inverse());
}

TEST_CASE("q^{1/2} squares back to q") {
  const PadicNum q(3, 10, 4);
  const PadicNum half = PadicNum::from_rational(3, 10, make_rational(1, 2));
  const PadicNum root = padic_qpow(q, half);
  CHECK(root * root == q);
}

TEST_CASE("fermionic integral of [x]_q at q = 4 is -1/5") {
  const PadicNum q(3, 8, 4);
  const FermionicResult res = fermionic_integral_stabilized(QBracketPower{q, 0, 1}, FermionicMeasure{}, 3, 8);
  CHECK(res.stabilized);
  CHECK(res.value == PadicNum::from_rational(3, 8, make_rational(-1, 5)));
}

TEST_CASE("shift relation I(f(.+1)) + I(f) = 2 f(0)") {
  const std::vector<long long> coeffs{3, -2, 5};
  const FermionicResult base = fermionic_integral_stabilized(PolynomialIntegrand{coeffs, 0}, {}, 5, 6);
  const FermionicResult shifted = fermionic_integral_stabilized(PolynomialIntegrand{coeffs, 1}, {}, 5, 6);
  CHECK(shifted.value + base.value == PadicNum(5, 6, 6));
}

TEST_CASE("multivariate sum matches the nested brute-force sum") {
  const PadicNum q(3, 5, 4);
  const BarnesIntegrand f{q, PadicNum(3, 5, 1), {1, 2}, {0, 1}, 2, std::nullopt};
  const FermionicResult fast = fermionic_integral_multi(f, 5);
  const PadicNum slow = fermionic_integral_multi_brute(
      [&](std::span<const long long> y) {
        return padic_qpow(q, PadicNum(3, 5, y[1])) * padic_qbracket_int(q, 1 + y[0] + 2 * y[1]).pow(2);
      },
      2, 3, fast.level, 5);
  CHECK(fast.moments[2] == slow);
}

TEST_CASE("q must be congruent to 1 mod p") {
  CHECK_THROWS_AS(require_padic_q(PadicNum(3, 5, 2)), Error);
}

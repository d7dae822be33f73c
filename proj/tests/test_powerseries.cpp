#include <doctest.h>

#include "qbarnes/powerseries.hpp"

using namespace qbarnes;

TEST_CASE("reciprocal of 2 + t") {
  FormalSeries a(std::vector<Rational>{Rational(2), Rational(1), Rational(0), Rational(0)});
  const FormalSeries inv = ps_reciprocal(a);
  CHECK(inv[0] == make_rational(1, 2));
  CHECK(inv[1] == make_rational(-1, 4));
  CHECK(inv[2] == make_rational(1, 8));
  CHECK(inv[3] == make_rational(-1, 16));
  const FormalSeries one = ps_product(a, inv);
  CHECK(one[0] == 1);
  for (int k = 1; k <= 3; ++k) CHECK(one[k] == 0);
}

TEST_CASE("classical Euler and Bernoulli values") {
  CHECK(euler_multi_classical(0, Rational(0), {Rational(1)}) == 1);
  CHECK(euler_multi_classical(1, Rational(0), {Rational(1)}) == make_rational(-1, 2));
  CHECK(euler_multi_classical(3, Rational(0), {Rational(1)}) == make_rational(1, 4));
  CHECK(euler_multi_classical(1, Rational(0), {Rational(1), Rational(1)}) == -1);
  CHECK(barnes_bernoulli(1, Rational(0), {Rational(1)}) == make_rational(-1, 2));
  CHECK(barnes_bernoulli(2, Rational(0), {Rational(1)}) == make_rational(1, 6));
  CHECK(barnes_bernoulli(1, Rational(0), {Rational(1), Rational(1)}) == -1);
  CHECK(barnes_bernoulli(2, Rational(1), {Rational(1), Rational(1)}) == make_rational(-1, 6));
}

TEST_CASE("exact binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(6) == 720);
}

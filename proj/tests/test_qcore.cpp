#include <doctest.h>

#include "qbarnes/qcore.hpp"

using namespace qbarnes;

TEST_CASE("q-bracket, factorial and binomial at q = 1/2") {
  const Rational q = make_rational(1, 2);
  CHECK(q_bracket_t<Rational>(3, q) == make_rational(7, 4));
  CHECK(q_factorial_t<Rational>(3, q) == make_rational(21, 8));
  CHECK(q_binomial_t<Rational>(4, 2, q) == make_rational(35, 16));
  CHECK(q_binomial_t<Rational>(7, 3, q) == q_binomial_t<Rational>(7, 4, q));
}

TEST_CASE("complex q-bracket agrees with the rational one") {
  const ComplexQ q(Complex(0.5, 0.0));
  CHECK(std::abs(q_bracket(3.0, q) - 1.75) < 1e-15);
  CHECK(std::abs(q_binomial(4, 2, q) - 35.0 / 16.0) < 1e-14);
}

TEST_CASE("q-bracket tends to x as q -> 1") {
  const ComplexQ q(Complex(1.0 - 1e-7, 0.0));
  CHECK(std::abs(q_bracket(2.5, q) - 2.5) < 1e-5);
}

TEST_CASE("q-binomial theorem: finite sum equals the Pochhammer product") {
  const ComplexQ q(Complex(0.3, 0.2));
  const Complex b(0.7, -0.1);
  for (int n = 0; n <= 8; ++n)
    CHECK(std::abs(q_binomial_theorem_sum(b, q, n) - q_pochhammer(b, q, n)) < 1e-12);
}

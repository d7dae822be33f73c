#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "qbarnes/gamma.hpp"
#include "qbarnes/qeuler.hpp"
#include "qbarnes/zeta.hpp"

using namespace qbarnes;

TEST_CASE("complex gamma") {
  CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-13);
  CHECK(std::abs(complex_gamma(0.5) - std::sqrt(boost::math::constants::pi<double>())) < 1e-13);
  CHECK(std::abs(complex_gamma(5.0) - 24.0) < 1e-11);
  CHECK(std::abs(complex_gamma(-0.5) + 2.0 * std::sqrt(boost::math::constants::pi<double>())) < 1e-12);
}

TEST_CASE("classical Barnes zeta") {
  const double pi = boost::math::constants::pi<double>();
  CHECK(std::abs(barnes_zeta_classical(2.0, 1.0, {1.0}).value - pi * pi / 6) < 1e-12);
  // sum_k (k+1)(k+2)^{-s} = zeta(s-1) - zeta(s)
  CHECK(std::abs(barnes_zeta_classical(3.0, 2.0, {1.0, 1.0}).value - 0.4428771636886322) < 1e-10);
  CHECK(barnes_zeta_negative(1, Rational(1), {Rational(1)}) == make_rational(-1, 12));
  CHECK(barnes_zeta_negative(1, Rational(2), {Rational(1), Rational(1)}) == make_rational(1, 12));
  CHECK(barnes_zeta_negative(0, Rational(1), {Rational(1)}) == make_rational(-1, 2));
}

TEST_CASE("q-zeta values and interpolation") {
  const ComplexQ q(Complex(0.5, 0.0));
  BarnesSpec spec = spec_q_euler(1.0);
  spec.a = {1};
  CHECK(std::abs(q_zeta(0.0, spec, q).value - 4.0 / 3.0) < 1e-12);
  for (int n = 0; n <= 4; ++n)
    CHECK(std::abs(q_zeta(double(-n), spec, q).value - q_euler_closed(n, spec, q)) < 1e-10);
  const BarnesSpec plain = spec_q_euler(1.0);
  CHECK(std::abs(q_zeta(-1.0, plain, q).value - 2.0 / 3.0) < 1e-8);
}

TEST_CASE("Mellin transform of a single twisted term") {
  BarnesSpec spec = spec_q_euler(1.0);
  spec.a = {1};
  const MellinResult m = mellin_check(2.0, spec, ComplexQ(Complex(0.5, 0.0)));
  CHECK(m.residual < 1e-8);
}

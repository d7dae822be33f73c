#include <doctest.h>

#include "qbarnes/chars.hpp"
#include "qbarnes/error.hpp"
#include "qbarnes/qeuler.hpp"

using namespace qbarnes;

namespace {

const ComplexQ kHalf(Complex(0.5, 0.0));

ExactBarnesSpec exact(std::vector<long long> w, std::vector<long long> a, long long x) {
  return ExactBarnesSpec{std::move(w), std::move(a), x, std::nullopt};
}

}  // namespace

TEST_CASE("exact closed forms") {
  const Rational half = make_rational(1, 2);
  CHECK(q_euler_closed_exact(1, exact({1}, {0}, 1), half) == make_rational(2, 3));
  CHECK(q_euler_closed_exact(2, exact({1}, {0}, 1), half) == make_rational(4, 15));
  CHECK(q_euler_closed_exact(1, exact({1}, {0}, 0), Rational(4)) == make_rational(-1, 5));
  CHECK(q_euler_closed_exact(0, exact({1, 1}, {1, 1}, 0), half) == make_rational(16, 9));
  CHECK(q_euler_closed_exact(0, ExactBarnesSpec{{1}, {0}, 0, character(3, 1)}, half) == -2);
}

TEST_CASE("complex closed form matches the exact one") {
  BarnesSpec spec;
  spec.w = {1.0, 2.0};
  spec.a = {0, 1};
  spec.x = 1.0;
  const Rational exactValue = q_euler_closed_exact(3, exact({1, 2}, {0, 1}, 1), make_rational(1, 2));
  CHECK(std::abs(q_euler_closed(3, spec, kHalf) - exactValue.convert_to<double>()) < 1e-13);
}

TEST_CASE("series summation: DIRECT and ABEL") {
  BarnesSpec twisted = spec_q_euler(0.0);
  twisted.a = {1};
  const SeriesResult d = q_euler_series(0, twisted, kHalf);
  CHECK(d.method == SumMethod::direct);
  CHECK(std::abs(d.value() - 4.0 / 3.0) < 1e-12);
  CHECK(d.error() < 1e-10);

  const SeriesResult a = q_euler_series(1, spec_q_euler(1.0), kHalf);
  CHECK(a.method == SumMethod::abel);
  CHECK(std::abs(a.value() - 2.0 / 3.0) < 1e-10);

  const SeriesResult c = q_euler_series(0, spec_q_euler_chi(character(3, 1), 0.0), kHalf);
  CHECK(std::abs(c.value() + 2.0) < 1e-10);
}

TEST_CASE("lattice collapse does not change values") {
  SumConfig on, off;
  off.collapse = false;
  BarnesSpec spec = spec_q_euler_r(2, 0.5);
  spec.a = {1, 1};
  const ComplexQ q(Complex(0.6, 0.0));
  for (int n = 0; n <= 3; ++n) {
    const Complex closed = q_euler_closed(n, spec, q);
    CHECK(std::abs(q_euler_series(n, spec, q, on).value() - closed) < 1e-9);
    CHECK(std::abs(q_euler_series(n, spec, q, off).value() - closed) < 1e-9);
  }
}

TEST_CASE("permuting axes leaves values unchanged") {
  BarnesSpec s1;
  s1.w = {1.0, 2.0};
  s1.a = {1, 2};
  s1.x = 0.25;
  BarnesSpec s2 = s1;
  s2.w = {2.0, 1.0};
  s2.a = {2, 1};
  for (int n = 0; n <= 3; ++n)
    CHECK(std::abs(q_euler_series(n, s1, kHalf).value() - q_euler_series(n, s2, kHalf).value()) < 1e-11);
}

TEST_CASE("doubling the term cap keeps DIRECT values stable") {
  BarnesSpec spec = spec_q_euler_r(2, 1.0);
  spec.a = {1, 2};
  SumConfig small, large;
  large.maxTermsPerAxis = 2 * small.maxTermsPerAxis;
  const ComplexQ q(Complex(0.8, 0.0));
  CHECK(std::abs(q_euler_series(2, spec, q, small).value() - q_euler_series(2, spec, q, large).value()) < 1e-11);
}

TEST_CASE("generating function: Taylor coefficients and radius") {
  BarnesSpec spec = spec_q_euler(1.0);
  spec.a = {1};
  for (int n = 0; n <= 4; ++n)
    CHECK(std::abs(q_euler_genfun_coefficient(n, spec, kHalf) - q_euler_closed(n, spec, kHalf)) < 1e-9);
  Complex resum = 0, term = 1;
  const Complex t(0.3, 0.0);
  for (int n = 0; n <= 30; ++n) {
    resum += q_euler_closed(n, spec, kHalf) * term;
    term *= t / double(n + 1);
  }
  CHECK(std::abs(q_euler_genfun(t, spec, kHalf) - resum) < 1e-10);
  CHECK_THROWS_AS(q_euler_genfun(Complex(4.0, 0.0), spec, kHalf), Error);
}

TEST_CASE("negative twists diverge over the complex numbers") {
  CHECK_THROWS_AS(q_euler_series(1, spec_q_euler_hr(0, 2, 1.0), kHalf), Error);
}

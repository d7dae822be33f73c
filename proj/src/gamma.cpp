#include "qbarnes/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qbarnes/error.hpp"

namespace qbarnes {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

Complex complex_gamma(Complex s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && std::trunc(s.real()) == s.real())
    throw Error(ErrorKind::PoleOfGamma, "Gamma has a pole at s = " + std::to_string(s.real()));
  constexpr double pi = std::numbers::pi;
  if (s.real() < 0.5) return pi / (std::sin(pi * s) * complex_gamma(1.0 - s));
  const Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + double(i));
  const Complex t = z + kG + 0.5;
  return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace qbarnes

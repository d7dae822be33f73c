#include "qbarnes/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "lattice_sum.hpp"
#include "qbarnes/error.hpp"
#include "qbarnes/gamma.hpp"
#include "qbarnes/powerseries.hpp"

namespace qbarnes {

double relative_deviation(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

namespace {

using LC = LongComplex;

class ClassicalZeta {
 public:
  ClassicalZeta(const std::vector<double>& a, int head, int corrections)
      : a_(a.begin(), a.end()), head_(head), corrections_(corrections) {
    // B_{2k} / (2k)!
    const FormalSeries bern = barnes_bernoulli_series(Rational(0), {Rational(1)}, 2 * corrections + 1);
    for (int k = 1; k <= corrections; ++k) coef_.push_back(static_cast<long double>(bern[2 * k].convert_to<double>()));
  }

  // Sum over the first N axes.
  LC eval(int N, LC s, LC u) {
    if (N == 0) return std::exp(-s * std::log(u));
    const long double a = a_[N - 1];
    LC sum = 0;
    for (int m = 0; m < head_; ++m) sum += eval(N - 1, s, u + static_cast<long double>(m) * a);
    const LC U = u + static_cast<long double>(head_) * a;
    sum += eval(N - 1, s - LC(1), U) / (a * (s - LC(1)));
    sum += eval(N - 1, s, U) / 2.0L;
    LC poch = s;  // (s)_{2k-1}
    long double apow = a;
    for (int k = 1; k <= corrections_; ++k) {
      const LC term = coef_[k - 1] * apow * poch * eval(N - 1, s + LC(2 * k - 1), U);
      sum += term;
      if (N == static_cast<int>(a_.size()) && k == corrections_) lastTerm_ = std::abs(term);
      poch *= (s + LC(2 * k - 1)) * (s + LC(2 * k));
      apow *= a * a;
    }
    return sum;
  }

  long double last_term() const { return lastTerm_; }

 private:
  std::vector<long double> a_;
  int head_;
  int corrections_;
  std::vector<long double> coef_;
  long double lastTerm_ = 0;
};

}  // namespace

ZetaPoint barnes_zeta_classical(Complex s, Complex w, const std::vector<double>& a, int headTerms,
                                int correctionTerms) {
  const int N = static_cast<int>(a.size());
  for (double aj : a)
    if (!(aj > 0)) throw Error(ErrorKind::InvalidParameter, "Barnes parameters must be positive");
  if (!(w.real() > 0)) throw Error(ErrorKind::InvalidParameter, "Barnes zeta needs Re(w) > 0");
  if (!(s.real() > N))
    throw Error(ErrorKind::OutsideConvergenceRegion,
                "Re(s) = " + std::to_string(s.real()) + " <= N = " + std::to_string(N) +
                    "; negative integers are available through barnes_zeta_negative");
  if (headTerms < 1 || correctionTerms < 1) throw Error(ErrorKind::InvalidParameter, "need positive term counts");
  ZetaPoint out{s, 0.0, SumMethod::direct, 0.0, false, 0};
  if (N == 0) {
    out.value = std::exp(-s * std::log(w));
    out.certified = true;
    out.termsUsed = 1;
    return out;
  }
  ClassicalZeta z(a, headTerms, correctionTerms);
  const LC v = z.eval(N, LC(s.real(), s.imag()), LC(w.real(), w.imag()));
  out.value = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  out.certifiedError = static_cast<double>(z.last_term());
  out.termsUsed = static_cast<std::uint64_t>(std::pow(headTerms + 2 + correctionTerms, N));
  return out;
}

Rational barnes_zeta_negative(int m, const Rational& w, const std::vector<Rational>& a) {
  if (m < 0) throw Error(ErrorKind::InvalidParameter, "m must be >= 0");
  const int N = static_cast<int>(a.size());
  for (const Rational& aj : a)
    if (aj <= 0) throw Error(ErrorKind::InvalidParameter, "Barnes parameters must be positive");
  if (w <= 0) throw Error(ErrorKind::InvalidParameter, "w must be positive");
  if (N == 0) return int_pow(w, m);
  const int budget = std::max(kDefaultOrderBudget, N + m);
  const Rational b = barnes_bernoulli(N + m, w, a, budget);
  const Rational sign = (N % 2) ? Rational(-1) : Rational(1);
  return sign * factorial(m) / factorial(N + m) * b;
}

ZetaPoint q_zeta(Complex s, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg) {
  detail::Leaf leaf;
  leaf.kind = detail::Leaf::Kind::negative_power;
  leaf.s = LC(s.real(), s.imag());
  const detail::LatticeResult res = detail::lattice_sum(spec, q, cfg, leaf);
  ZetaPoint out;
  out.s = s;
  out.value = Complex(static_cast<double>(res.values[0].real()), static_cast<double>(res.values[0].imag()));
  out.method = res.method;
  out.certifiedError = res.errors[0];
  out.certified = res.method == SumMethod::direct;
  out.termsUsed = res.terms;
  return out;
}

std::vector<ZetaPoint> q_zeta_negative_integers(int nMax, const BarnesSpec& spec, const ComplexQ& q,
                                                const SumConfig& cfg) {
  if (nMax < 0) throw Error(ErrorKind::InvalidParameter, "nMax must be >= 0");
  detail::Leaf leaf;
  leaf.kind = detail::Leaf::Kind::powers;
  leaf.maxDegree = nMax;
  const detail::LatticeResult res = detail::lattice_sum(spec, q, cfg, leaf);
  std::vector<ZetaPoint> out(nMax + 1);
  for (int n = 0; n <= nMax; ++n) {
    ZetaPoint& z = out[n];
    z.s = Complex(-n);
    z.value = Complex(static_cast<double>(res.values[n].real()), static_cast<double>(res.values[n].imag()));
    z.method = res.method;
    z.certifiedError = res.errors[n];
    z.certified = res.method == SumMethod::direct;
    z.termsUsed = res.terms;
  }
  return out;
}

MellinResult mellin_check(Complex s, const BarnesSpec& spec, const ComplexQ& q, const QuadConfig& quad,
                          const SumConfig& cfg) {
  spec.validate();
  if (!(s.real() > 0)) throw Error(ErrorKind::InvalidParameter, "Mellin transform needs Re(s) > 0");
  for (int a : spec.a)
    if (a < 1) throw Error(ErrorKind::InvalidParameter, "Mellin check needs absolutely convergent twists a_j >= 1");

  // Tail: |F(-t)| <= 2^r prod_j 1/(1-|q|^{a_j}) e^{-ymin t}, ymin = (1 - |q^x|)/|1-q|.
  const double absq = std::abs(q.value());
  const double qxAbs = std::abs(std::exp(spec.x * std::log(q.value())));
  const double ymin = (1 - qxAbs) / std::abs(1.0 - q.value());
  if (!(ymin > 0)) throw Error(ErrorKind::InvalidParameter, "Mellin check needs |q^x| < 1");
  double mass = std::pow(2.0, spec.order());
  for (int a : spec.a) mass /= 1 - std::pow(absq, a);
  const double sigma = s.real();
  const double tailFactor = mass * std::exp(std::numbers::pi * std::abs(s.imag()) / 2);
  auto tail = [&](double T) {
    return tailFactor * boost::math::tgamma(sigma, ymin * T) / std::pow(ymin, sigma);
  };
  double T = 1.0;
  while (tail(T) > quad.tolerance * 0.1) {
    T *= 2;
    if (T > quad.maxCutoff)
      throw Error(ErrorKind::QuadratureBudgetExceeded, "exponential tail too slow for the cutoff limit");
  }

  SumConfig inner = cfg;
  inner.tolerance = std::min(cfg.tolerance, quad.tolerance * 1e-3);
  auto integrand = [&](double t) -> Complex {
    if (t == 0.0) return 0.0;
    detail::Leaf leaf;
    leaf.kind = detail::Leaf::Kind::exponential;
    leaf.t = LC(-t);
    const LC F = detail::lattice_sum(spec, q, inner, leaf).values[0];
    return std::exp((s - 1.0) * std::log(t)) * Complex(static_cast<double>(F.real()), static_cast<double>(F.imag()));
  };
  double quadError = 0.0;
  const Complex integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, T, quad.maxDepth, quad.tolerance * 0.1, &quadError);
  if (!(quadError <= quad.tolerance))
    throw Error(ErrorKind::QuadratureBudgetExceeded, "adaptive quadrature error estimate " +
                                                         std::to_string(quadError) + " above tolerance");
  MellinResult out;
  out.transform = integral / complex_gamma(s);
  out.zeta = q_zeta(s, spec, q, cfg).value;
  out.residual = relative_deviation(out.transform, out.zeta);
  out.cutoff = T;
  out.tailBound = tail(T);
  out.quadratureError = quadError;
  return out;
}

InterpolationReport interpolation_suite(int nMax, const std::vector<BarnesSpec>& grid, const std::vector<double>& qs,
                                        const SumConfig& cfg) {
  InterpolationReport rep;
  for (const BarnesSpec& spec : grid)
    for (double qv : qs) {
      const ComplexQ q(qv);
      std::vector<ZetaPoint> zs;
      std::optional<Error> batchError;
      try {
        zs = q_zeta_negative_integers(nMax, spec, q, cfg);
      } catch (const Error& e) {
        batchError = e;
      }
      for (int n = 0; n <= nMax; ++n) {
        InterpolationCell cell{spec, qv, n, 0.0, 0.0, 0.0, SumMethod::direct, {}};
        try {
          if (batchError) throw *batchError;
          const ZetaPoint& z = zs[n];
          cell.zeta = z.value;
          cell.method = z.method;
          cell.closed = q_euler_closed(n, spec, q);
          cell.deviation = relative_deviation(cell.zeta, cell.closed);
          if (z.method == SumMethod::abel) {
            ++rep.abel;
            rep.maxAbel = std::max(rep.maxAbel, cell.deviation);
          } else {
            ++rep.direct;
            rep.maxDirect = std::max(rep.maxDirect, cell.deviation);
          }
        } catch (const Error& e) {
          cell.error = std::string(e.name());
          ++rep.failed;
        }
        rep.cells.push_back(std::move(cell));
      }
    }
  return rep;
}

}  // namespace qbarnes

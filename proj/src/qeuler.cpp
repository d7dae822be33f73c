#include "qbarnes/qeuler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lattice_sum.hpp"
#include "qbarnes/error.hpp"
#include "qbarnes/powerseries.hpp"

namespace qbarnes {

void BarnesSpec::validate() const {
  if (w.empty()) throw Error(ErrorKind::InvalidParameter, "order r must be >= 1");
  if (a.size() != w.size()) throw Error(ErrorKind::InvalidParameter, "weights and twists differ in length");
  for (double wj : w)
    if (!(wj > 0) || !std::isfinite(wj)) throw Error(ErrorKind::InvalidParameter, "weights must be positive");
}

void ExactBarnesSpec::validate() const {
  if (w.empty()) throw Error(ErrorKind::InvalidParameter, "order r must be >= 1");
  if (a.size() != w.size()) throw Error(ErrorKind::InvalidParameter, "weights and twists differ in length");
  if (chi && !chi->is_real()) throw Error(ErrorKind::InvalidParameter, "exact backend needs a real character");
}

std::string_view method_name(SumMethod m) {
  switch (m) {
    case SumMethod::closed: return "CLOSED";
    case SumMethod::direct: return "DIRECT";
    case SumMethod::abel: return "ABEL";
    case SumMethod::bernoulli: return "BERNOULLI";
  }
  return "UNKNOWN";
}

BarnesSpec spec_q_euler(Complex x) { return {{1.0}, {0}, x, std::nullopt}; }

BarnesSpec spec_q_euler_r(int r, Complex x) {
  return {std::vector<double>(r, 1.0), std::vector<int>(r, 0), x, std::nullopt};
}

BarnesSpec spec_q_euler_hr(int h, int r, Complex x) {
  BarnesSpec s{std::vector<double>(r, 1.0), std::vector<int>(r), x, std::nullopt};
  for (int j = 1; j <= r; ++j) s.a[j - 1] = h - j;
  return s;
}

BarnesSpec spec_barnes(std::vector<double> w, Complex x) {
  const std::size_t r = w.size();
  return {std::move(w), std::vector<int>(r, 0), x, std::nullopt};
}

BarnesSpec spec_q_euler_chi(const DirichletChar& chi, Complex x) { return {{1.0}, {0}, x, chi}; }

namespace {

// 2^r/(1-q)^n sum_l C(n,l) (-1)^l q^{lx} prod_j N_j(l) / (1 + Q_j(l)^f), with
// Q_j(l) = q^{l w_j + a_j} and N_j(l) = sum_{b<f} chi(b) (-1)^b Q_j(l)^b.
template <class T, class QC, class Guard>
T master_closed(int n, int r, const T& oneMinusQ, QC qc, const std::vector<T>& qlx, const std::vector<T>& chi,
                Guard guard) {
  const int f = static_cast<int>(chi.size());
  T sum(0);
  for (int l = 0; l <= n; ++l) {
    T prod(1);
    for (int j = 0; j < r; ++j) {
      const T Q = qc(l, j);
      T num(0), Qb(1);
      for (int b = 0; b < f; ++b) {
        const T term = chi[b] * Qb;
        num += (b % 2) ? T(-term) : term;
        Qb *= Q;
      }
      const T den = T(1) + Qb;  // Qb = Q^f
      guard(den);
      prod *= num / den;
    }
    const T term = T(binomial(n, l).str().c_str()) * qlx[l] * prod;
    sum += (l % 2) ? T(-term) : term;
  }
  T scale = int_pow(T(2), r);
  return scale * sum / int_pow(oneMinusQ, n);
}

}  // namespace

Complex q_euler_closed(int n, const BarnesSpec& spec, const ComplexQ& q) {
  spec.validate();
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "degree must be >= 0");
  if (q.value() == Complex(0.0)) {
    // q = 0: [y]_0 = 1 for y != 0; the closed form degenerates, use its limit.
    throw Error(ErrorKind::InvalidParameter, "closed form needs q != 0");
  }
  const ExtComplex qe(q.value().real(), q.value().imag());
  const ExtComplex logq = log(qe);
  const ExtComplex xe(spec.x.real(), spec.x.imag());
  const int r = spec.order();
  std::vector<ExtComplex> qlx(n + 1), chi;
  for (int l = 0; l <= n; ++l) qlx[l] = l == 0 ? ExtComplex(1) : exp(ExtComplex(l) * xe * logq);
  if (spec.chi) {
    for (int b = 0; b < spec.chi->modulus(); ++b) chi.push_back(spec.chi->value_as<ExtComplex>(b));
  } else {
    chi.push_back(ExtComplex(1));
  }
  auto qc = [&](int l, int j) {
    const ExtReal c = ExtReal(l) * ExtReal(spec.w[j]) + ExtReal(spec.a[j]);
    return c == 0 ? ExtComplex(1) : exp(ExtComplex(c) * logq);
  };
  auto guard = [](const ExtComplex& den) {
    if (abs(den) < ExtReal(1e-12))
      throw Error(ErrorKind::SmallDenominator, "closed-form denominator 1 + q^{(lw+a)f} is below 1e-12");
  };
  const ExtComplex v = master_closed<ExtComplex>(n, r, ExtComplex(1) - qe, qc, qlx, chi, guard);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Rational q_euler_closed_exact(int n, const ExactBarnesSpec& spec, const Rational& q) {
  spec.validate();
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "degree must be >= 0");
  if (q == 0 || q == 1) throw Error(ErrorKind::InvalidParameter, "exact closed form needs q not in {0, 1}");
  const int r = spec.order();
  std::vector<Rational> qlx(n + 1), chi;
  for (int l = 0; l <= n; ++l) qlx[l] = int_pow(q, static_cast<long long>(l) * spec.x);
  if (spec.chi) {
    for (int b = 0; b < spec.chi->modulus(); ++b) chi.push_back(Rational(spec.chi->real_value(b)));
  } else {
    chi.push_back(Rational(1));
  }
  auto qc = [&](int l, int j) { return int_pow(q, l * spec.w[j] + spec.a[j]); };
  auto guard = [](const Rational& den) {
    if (den == 0) throw Error(ErrorKind::SmallDenominator, "closed-form denominator vanishes");
  };
  return master_closed<Rational>(n, r, Rational(1) - q, qc, qlx, chi, guard);
}

SeriesResult q_euler_series(int n, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "degree must be >= 0");
  detail::Leaf leaf;
  leaf.kind = detail::Leaf::Kind::powers;
  leaf.maxDegree = n;
  const detail::LatticeResult res = detail::lattice_sum(spec, q, cfg, leaf);
  SeriesResult out;
  for (const LongComplex& v : res.values)
    out.values.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  out.errors = res.errors;
  out.method = res.method;
  out.termsUsed = res.terms;
  out.collapsed = res.collapsed;
  return out;
}

namespace {

void check_radius(Complex t, const BarnesSpec& spec) {
  spec.validate();
  double radius = INFINITY;
  for (double w : spec.w) radius = std::min(radius, std::numbers::pi / w);
  if (!(std::abs(t) < radius))
    throw Error(ErrorKind::RadiusExceeded,
                "|t| = " + std::to_string(std::abs(t)) + " not below " + std::to_string(radius));
}

}  // namespace

Complex q_euler_genfun(Complex t, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg) {
  check_radius(t, spec);
  detail::Leaf leaf;
  leaf.kind = detail::Leaf::Kind::exponential;
  leaf.t = LongComplex(t.real(), t.imag());
  const LongComplex v = detail::lattice_sum(spec, q, cfg, leaf).values.front();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex q_euler_genfun_coefficient(int n, const BarnesSpec& spec, const ComplexQ& q, double radius, int points,
                                   const SumConfig& cfg) {
  if (n < 0 || points <= n) throw Error(ErrorKind::InvalidParameter, "need 0 <= n < points");
  check_radius(Complex(radius), spec);
  Complex acc = 0.0;
  for (int k = 0; k < points; ++k) {
    const double theta = 2 * std::numbers::pi * k / points;
    const Complex t = std::polar(radius, theta);
    acc += q_euler_genfun(t, spec, q, cfg) * std::polar(1.0, -theta * n);
  }
  double fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return acc * fact / (points * std::pow(radius, n));
}

double generalized_recurrence_check(int m, int n, const DirichletChar& chi, const ComplexQ& q) {
  if (m < 0 || n < 1) throw Error(ErrorKind::InvalidParameter, "need m >= 0 and n >= 1");
  const int f = chi.modulus();
  const Complex lhs = q_euler_closed(m, spec_q_euler_chi(chi, double(n) * f), q) -
                      (n % 2 ? -1.0 : 1.0) * q_euler_closed(m, spec_q_euler_chi(chi, 0.0), q);
  Complex rhs = 0.0;
  for (int l = 0; l < n * f; ++l) {
    const Complex term = chi(l) * std::pow(q_bracket(double(l), q), m);
    rhs += ((n - 1 - l) % 2 == 0) ? term : -term;
  }
  return std::abs(lhs - 2.0 * rhs);
}

Complex distribution_chi_rhs(int n, Complex x, const DirichletChar& chi, const ComplexQ& q) {
  const int f = chi.modulus();
  const ComplexQ qf(int_pow(q.value(), f), q.digits());
  Complex sum = 0.0;
  for (int b = 0; b < f; ++b) {
    const Complex c = chi(b);
    if (c == 0.0) continue;
    const Complex term = c * q_euler_closed(n, spec_q_euler((x + double(b)) / double(f)), qf);
    sum += (b % 2) ? -term : term;
  }
  return std::pow(q_bracket(double(f), q), n) * sum;
}

Complex distribution_hr_rhs(int n, int h, int r, Complex x, int f, const ComplexQ& q, bool singleVariable) {
  if (r < 1 || f < 1 || f % 2 == 0) throw Error(ErrorKind::InvalidParameter, "need r >= 1 and odd f");
  const ComplexQ qf(int_pow(q.value(), f), q.digits());
  std::vector<int> b(r, 0);
  Complex sum = 0.0;
  while (true) {
    int total = 0;
    long long twist = 0;
    for (int j = 0; j < r; ++j) {
      total += b[j];
      twist += static_cast<long long>(h - (j + 1)) * b[j];
    }
    const Complex arg = (x + double(total)) / double(f);
    const BarnesSpec spec = singleVariable ? spec_q_euler(arg) : spec_q_euler_hr(h, r, arg);
    const Complex term = int_pow(q.value(), twist) * q_euler_closed(n, spec, qf);
    sum += (total % 2) ? -term : term;
    int j = r - 1;
    while (j >= 0 && ++b[j] == f) b[j--] = 0;
    if (j < 0) break;
  }
  return std::pow(q_bracket(double(f), q), n) * sum;
}

}  // namespace qbarnes

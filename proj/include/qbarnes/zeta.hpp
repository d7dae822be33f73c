#pragma once

// Barnes multiple zeta functions: the classical lattice sum and the signed,
// q-deformed, character-twisted version
//
//   zeta_{q,r}(s, x | w; a) = 2^r sum_m prod_j chi(m_j) (-1)^{m_j} q^{a_j m_j}
//                             [x + sum_j w_j m_j]_q^{-s},
//
// which reproduces the q-Euler family at s = -n.

#include <cstdint>
#include <string>
#include <vector>

#include "qbarnes/numeric.hpp"
#include "qbarnes/qeuler.hpp"

namespace qbarnes {

struct ZetaPoint {
  Complex s;
  Complex value;
  SumMethod method = SumMethod::direct;
  /// Rigorous bound for q-zeta direct sums; the size of the first omitted
  /// Euler-Maclaurin term for the classical zeta; extrapolation spread for ABEL.
  double certifiedError = 0.0;
  bool certified = false;
  std::uint64_t termsUsed = 0;
};

/// sum_{m >= 0} (w + sum_j m_j a_j)^{-s} for Re(s) > N, Re(w) > 0, a_j > 0.
/// Each axis is summed with Euler-Maclaurin after `headTerms` explicit terms.
/// N = 0 returns w^{-s}.  OutsideConvergenceRegion when Re(s) <= N.
ZetaPoint barnes_zeta_classical(Complex s, Complex w, const std::vector<double>& a, int headTerms = 10,
                                int correctionTerms = 8);

/// zeta_N(-m, w | a) = (-1)^N m! / (N+m)! B_{N+m}(w, N | a), exact.
Rational barnes_zeta_negative(int m, const Rational& w, const std::vector<Rational>& a);

/// zeta_{q,r}(s, x | w; a), or the q-l function when spec.chi is set.
ZetaPoint q_zeta(Complex s, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg = {});

/// q_zeta at s = 0, -1, ..., -nMax from a single lattice pass.
std::vector<ZetaPoint> q_zeta_negative_integers(int nMax, const BarnesSpec& spec, const ComplexQ& q,
                                                const SumConfig& cfg = {});

struct QuadConfig {
  double tolerance = 1e-9;
  int maxDepth = 20;
  /// Upper limit for the truncation point T of [0, T].
  double maxCutoff = 1e5;
};

struct MellinResult {
  Complex transform;   // (1/Gamma(s)) int_0^inf t^{s-1} F(-t) dt
  Complex zeta;        // q_zeta(s)
  double residual = 0.0;  // |transform - zeta| / max(1, |zeta|)
  double cutoff = 0.0;
  double tailBound = 0.0;
  double quadratureError = 0.0;
};

/// Mellin transform of the generating function compared with q_zeta(s).
/// Requires Re(s) > 0 and all a_j >= 1.
MellinResult mellin_check(Complex s, const BarnesSpec& spec, const ComplexQ& q, const QuadConfig& quad = {},
                          const SumConfig& cfg = {});

struct InterpolationCell {
  BarnesSpec spec;
  double q = 0.0;
  int n = 0;
  Complex zeta;
  Complex closed;
  double deviation = 0.0;
  SumMethod method = SumMethod::direct;
  /// Error name when the series could not be evaluated.
  std::string error;
};

struct InterpolationReport {
  std::vector<InterpolationCell> cells;
  double maxDirect = 0.0;
  double maxAbel = 0.0;
  int direct = 0;
  int abel = 0;
  int failed = 0;
};

/// q_zeta(-n) against q_euler_closed(n) for every grid spec, q and n <= nMax.
/// Cell failures are recorded, not thrown.
InterpolationReport interpolation_suite(int nMax, const std::vector<BarnesSpec>& grid, const std::vector<double>& qs,
                                        const SumConfig& cfg = {});

/// |a - b| / max(1, |b|)
double relative_deviation(Complex a, Complex b);

}  // namespace qbarnes

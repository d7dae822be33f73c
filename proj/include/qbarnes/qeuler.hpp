#pragma once

// The master q-Euler family
//
//   E_{n,chi,q}^{(r)}(x | w; a) = 2^r sum_{m >= 0} prod_j chi(m_j) (-1)^{m_j} q^{a_j m_j}
//                                  [x + sum_j w_j m_j]_q^n
//
// evaluated three ways: the finite closed form, the lattice series (direct or
// Abel-regularized), and the generating function in t.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qbarnes/chars.hpp"
#include "qbarnes/numeric.hpp"
#include "qbarnes/qcore.hpp"

namespace qbarnes {

struct BarnesSpec {
  std::vector<double> w;
  std::vector<int> a;
  Complex x{0.0};
  std::optional<DirichletChar> chi;

  int order() const noexcept { return static_cast<int>(w.size()); }
  /// Throws InvalidParameter on mismatched lengths, r = 0 or nonpositive weights.
  void validate() const;
};

/// Integer-parameter spec for the exact rational backend; characters must be real.
struct ExactBarnesSpec {
  std::vector<long long> w;
  std::vector<long long> a;
  long long x = 0;
  std::optional<DirichletChar> chi;

  int order() const noexcept { return static_cast<int>(w.size()); }
  void validate() const;
};

enum class SumMethod { closed, direct, abel, bernoulli };
std::string_view method_name(SumMethod m);

struct SumConfig {
  /// Per-axis cap for absolutely convergent sums.
  int maxTermsPerAxis = 2000;
  /// Per-axis cap (residues times accelerated terms) for regularized sums.
  int maxTermsPerAxisAbel = 4000;
  double tolerance = 1e-12;
  /// Relative agreement required between the last two Abel extrapolants.
  double abelTolerance = 1e-9;
  /// Abel points t_k = 1 - 2^{-k}.
  std::vector<int> abelSchedule{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
  int richardsonOrder = 3;
  /// Ceiling on lattice points visited by one evaluation.
  std::uint64_t workBudget = 400'000'000;
  /// Use the single-sum form when all weights are equal and the twists allow it.
  bool collapse = true;
};

// ---------------------------------------------------------------------------
// Named members of the family.

BarnesSpec spec_q_euler(Complex x);                     // E_{n,q}(x)
BarnesSpec spec_q_euler_r(int r, Complex x);            // E_{n,q}^{(r)}(x)
BarnesSpec spec_q_euler_hr(int h, int r, Complex x);    // E_{n,q}^{(h,r)}(x), a_j = h - j
BarnesSpec spec_barnes(std::vector<double> w, Complex x);  // E_{n,q}^{(r)}(x | w)
BarnesSpec spec_q_euler_chi(const DirichletChar& chi, Complex x);  // E_{n,chi,q}(x)

// ---------------------------------------------------------------------------
// Closed form:
//   2^r/(1-q)^n sum_l C(n,l) (-1)^l q^{lx}
//     prod_j [sum_{b<f} chi(b) (-1)^b q^{(l w_j + a_j) b}] / (1 + q^{(l w_j + a_j) f}).

/// Evaluated with 50-digit intermediates.  SmallDenominator when some
/// |1 + q^{(l w_j + a_j) f}| < 1e-12.
Complex q_euler_closed(int n, const BarnesSpec& spec, const ComplexQ& q);
Rational q_euler_closed_exact(int n, const ExactBarnesSpec& spec, const Rational& q);

// ---------------------------------------------------------------------------
// Lattice series.

struct SeriesResult {
  /// Values for degrees 0..n.
  std::vector<Complex> values;
  SumMethod method = SumMethod::direct;
  /// Per-degree truncation bound (direct) or extrapolation spread (abel).
  std::vector<double> errors;
  std::uint64_t termsUsed = 0;
  bool collapsed = false;

  Complex value() const { return values.back(); }
  double error() const { return errors.back(); }
};

/// Direct summation when every a_j >= 1, Abel regularization when some
/// a_j = 0.  Negative twists make the lattice sum diverge geometrically and
/// raise NoConvergence.
SeriesResult q_euler_series(int n, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg = {});

/// Generating function F(t) = 2^r sum (twists) e^{[x + sum w_j m_j]_q t}.
/// RadiusExceeded unless |t| < min_j pi / w_j.
Complex q_euler_genfun(Complex t, const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg = {});

/// n! [t^n] F(t) from a trapezoid rule on the circle |t| = radius.
Complex q_euler_genfun_coefficient(int n, const BarnesSpec& spec, const ComplexQ& q, double radius = 0.5,
                                   int points = 32, const SumConfig& cfg = {});

// ---------------------------------------------------------------------------
// Identities.

/// |E_{m,chi,q}(nf) - (-1)^n E_{m,chi,q}(0) - 2 sum_{l<nf} (-1)^{n-1-l} chi(l) [l]_q^m|.
double generalized_recurrence_check(int m, int n, const DirichletChar& chi, const ComplexQ& q);

/// [f]_q^n sum_{b<f} chi(b) (-1)^b E_{n,q^f}((x+b)/f).
Complex distribution_chi_rhs(int n, Complex x, const DirichletChar& chi, const ComplexQ& q);

/// [f]_q^n sum_{b in [0,f)^r} (-1)^{sum b} q^{sum (h-j) b_j} G((x + sum b)/f), where G is
/// E_{n,q^f}^{(h,r)} or, with `singleVariable`, the one-variable E_{n,q^f}.
Complex distribution_hr_rhs(int n, int h, int r, Complex x, int f, const ComplexQ& q, bool singleVariable = false);

}  // namespace qbarnes

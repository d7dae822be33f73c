#pragma once

// Fermionic p-adic integrals realized as level-N Riemann sums
//
//   I_q(f) ~ (1+q)/(1+q^{L}) * sum_{x<L} f(x) (-q)^x,   L = d p^N,
//
// where d = 1 on Z_p and d = f (the character modulus) on X.  The measure
// with q = 1 has prefactor 1 and weight (-1)^x.  Levels are swept upward
// until two consecutive sums agree mod p^K.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qbarnes/chars.hpp"
#include "qbarnes/padic.hpp"

namespace qbarnes {

/// Work ceiling in summed lattice points per axis.  Read once from
/// QBARNES_WORK_BUDGET when set.
std::uint64_t default_work_budget();

struct FermionicConfig {
  int minLevel = 1;
  int maxLevel = 40;
  std::uint64_t workBound = default_work_budget();
  /// Largest number of integration variables accepted by the multivariate sum.
  int maxOrder = 2;
};

/// mu_1 when q is empty, mu_q otherwise.
struct FermionicMeasure {
  std::optional<PadicNum> q;
};

/// [x + shift]_q^degree
struct QBracketPower {
  PadicNum q;
  long long shift = 0;
  int degree = 0;
};

/// chi(x) q^{twist x} [weight x + shift]_q^degree, integrated over X when chi
/// is present.
struct TwistedQBracket {
  PadicNum q;
  std::optional<DirichletChar> chi;
  long long twist = 0;
  long long weight = 1;
  long long shift = 0;
  int degree = 0;
};

/// sum_i coeffs[i] (x + shift)^i with integer coefficients.
struct PolynomialIntegrand {
  std::vector<long long> coeffs;
  long long shift = 0;
};

/// Arbitrary function on the nonnegative integers.
struct TabulatedIntegrand {
  std::function<PadicNum(long long)> f;
};

using IntegrandSpec = std::variant<QBracketPower, TwistedQBracket, PolynomialIntegrand, TabulatedIntegrand>;

struct LevelSum {
  int level = 0;
  PadicNum value;
  /// v_p(S_N - S_{N-1}); kInfiniteValuation when they agree to full precision.
  int diffValuation = 0;
};

struct FermionicResult {
  PadicNum value;
  int level = 0;
  /// Valuation of the difference between the returned level and the one below.
  int stabilization = 0;
  bool stabilized = false;
  std::uint64_t points = 0;
  std::vector<LevelSum> levels;
  /// Values for every degree 0..n (multivariate Barnes integrands only).
  std::vector<PadicNum> moments;
};

/// Level-N Riemann sum of a one-variable integrand, with the level N-1 sum
/// reported through `stabilization`.
FermionicResult fermionic_integral(const IntegrandSpec& f, const FermionicMeasure& measure, std::uint64_t p, int N,
                                   int K, const FermionicConfig& cfg = {});

/// Sweeps N = minLevel.. until successive levels agree mod p^K.  Throws
/// LevelTooSmall when the work bound is reached first.
FermionicResult fermionic_integral_stabilized(const IntegrandSpec& f, const FermionicMeasure& measure,
                                              std::uint64_t p, int K, const FermionicConfig& cfg = {});

/// Multivariate master integrand
///   prod_j chi(x_j) q^{sum_j a_j x_j} [x + sum_j w_j x_j]_q^n
/// over Z_p^r (or X^r with chi), all against mu_1.
struct BarnesIntegrand {
  PadicNum q;
  PadicNum x;
  std::vector<long long> w;
  std::vector<long long> a;
  int degree = 0;
  std::optional<DirichletChar> chi;
};

/// Level-N values for every degree 0..n, computed through per-axis moment
/// tables; algebraically identical to the r-fold nested Riemann sum.
std::vector<PadicNum> fermionic_barnes_level(const BarnesIntegrand& f, int N, const FermionicConfig& cfg = {});

/// Stabilized multivariate integral; `moments` holds all degrees <= n.
FermionicResult fermionic_integral_multi(const BarnesIntegrand& f, int K, const FermionicConfig& cfg = {});

/// Literal r-fold nested Riemann sum of f(x_1..x_r) prod_j (-1)^{x_j} over
/// x_j < base p^N.  Exponential in r; used for small levels.
PadicNum fermionic_integral_multi_brute(const std::function<PadicNum(std::span<const long long>)>& f, int r,
                                        std::uint64_t p, int N, int K, long long base = 1,
                                        const FermionicConfig& cfg = {});

}  // namespace qbarnes

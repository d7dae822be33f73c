#include "qbarnes/fermionic.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace qbarnes {

std::uint64_t default_work_budget() {
  static const std::uint64_t budget = [] {
    if (const char* env = std::getenv("QBARNES_WORK_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(60'000'000);
  }();
  return budget;
}

namespace {

std::uint64_t level_length(std::uint64_t base, std::uint64_t p, int N) {
  unsigned __int128 L = base;
  for (int i = 0; i < N; ++i) {
    L *= p;
    if (L > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t(1) << 62;
  }
  return static_cast<std::uint64_t>(L);
}

// Sequential evaluator x = 0, 1, 2, ... of a one-variable integrand, as residues mod p^K.
struct PointStream {
  std::function<std::uint64_t()> next;
  std::uint64_t base = 1;
};

std::uint64_t residue_at(const PadicNum& v, int K) { return v.reduced(K).residue(); }

PointStream make_stream(const IntegrandSpec& spec, std::uint64_t p, int K) {
  const ModArith mod(checked_prime_power(p, K));
  return std::visit(
      [&](const auto& f) -> PointStream {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QBracketPower>) {
          require_padic_q(f.q);
          const std::uint64_t q = residue_at(f.q, K);
          std::uint64_t bracket = residue_at(padic_qbracket_int(f.q, f.shift), K);
          const int n = f.degree;
          return {[=]() mutable {
                    std::uint64_t v = 1 % mod.modulus();
                    for (int i = 0; i < n; ++i) v = mod.mul(v, bracket);
                    bracket = mod.add(1 % mod.modulus(), mod.mul(q, bracket));
                    return v;
                  },
                  1};
        } else if constexpr (std::is_same_v<T, TwistedQBracket>) {
          require_padic_q(f.q);
          const PadicNum qK = f.q.reduced(K);
          const std::uint64_t stepTwist = qK.pow(f.twist).residue();
          const std::uint64_t stepPower = qK.pow(f.weight).residue();
          const std::uint64_t wBracket = padic_qbracket_int(qK, f.weight).residue();
          std::uint64_t bracket = padic_qbracket_int(qK, f.shift).residue();
          std::uint64_t power = qK.pow(f.shift).residue();  // q^{w x + c}
          std::uint64_t twist = 1 % mod.modulus();
          std::vector<std::uint64_t> chiTable{1 % mod.modulus()};
          std::uint64_t base = 1;
          if (f.chi) {
            base = f.chi->modulus();
            chiTable.resize(base);
            for (std::uint64_t m = 0; m < base; ++m) chiTable[m] = mod.from_signed(f.chi->real_value(m));
          }
          const int n = f.degree;
          std::uint64_t x = 0;
          return {[=]() mutable {
                    std::uint64_t v = chiTable[x % chiTable.size()];
                    v = mod.mul(v, twist);
                    for (int i = 0; i < n; ++i) v = mod.mul(v, bracket);
                    bracket = mod.add(bracket, mod.mul(power, wBracket));
                    power = mod.mul(power, stepPower);
                    twist = mod.mul(twist, stepTwist);
                    ++x;
                    return v;
                  },
                  base};
        } else if constexpr (std::is_same_v<T, PolynomialIntegrand>) {
          std::vector<std::uint64_t> c;
          for (long long ci : f.coeffs) c.push_back(mod.from_signed(ci));
          long long x = f.shift;
          return {[=]() mutable {
                    const std::uint64_t xr = mod.from_signed(x++);
                    std::uint64_t v = 0;
                    for (auto it = c.rbegin(); it != c.rend(); ++it) v = mod.add(mod.mul(v, xr), *it);
                    return v;
                  },
                  1};
        } else {
          long long x = 0;
          auto fn = f.f;
          return {[=]() mutable { return residue_at(fn(x++), K); }, 1};
        }
      },
      spec);
}

int diff_valuation(const PadicNum& a, const PadicNum& b) { return (a - b).valuation(); }

}  // namespace

namespace {

// Shared level sweep.  Stops at level `fixedLevel` when given, otherwise at
// the first level agreeing with its predecessor mod p^K.
FermionicResult sweep_1d(const IntegrandSpec& f, const FermionicMeasure& measure, std::uint64_t p, int K,
                         const FermionicConfig& cfg, std::optional<int> fixedLevel) {
  const ModArith mod(checked_prime_power(p, K));
  PointStream stream = make_stream(f, p, K);

  std::uint64_t weight = 1 % mod.modulus();
  std::uint64_t weightStep = mod.neg(1 % mod.modulus());
  std::optional<PadicNum> qK;
  if (measure.q) {
    require_padic_q(*measure.q);
    if (measure.q->prime() != p) throw Error(ErrorKind::InvalidParameter, "measure q lives over another prime");
    qK = measure.q->reduced(K);
    weightStep = mod.neg(qK->residue());
  }

  FermionicResult out{PadicNum(p, K), 0, 0, false, 0, {}, {}};
  std::uint64_t sum = 0;
  std::uint64_t x = 0;
  const int lastLevel = fixedLevel ? *fixedLevel : cfg.maxLevel;
  for (int N = 1; N <= lastLevel; ++N) {
    const std::uint64_t L = level_length(stream.base, p, N);
    if (L > cfg.workBound) {
      if (fixedLevel)
        throw Error(ErrorKind::LevelTooSmall,
                    "level " + std::to_string(N) + " needs " + std::to_string(L) + " points, above the work bound");
      throw Error(ErrorKind::LevelTooSmall, "no stabilization mod p^" + std::to_string(K) +
                                                " before the work bound (reached level " + std::to_string(N - 1) + ")");
    }
    for (; x < L; ++x) {
      sum = mod.add(sum, mod.mul(weight, stream.next()));
      weight = mod.mul(weight, weightStep);
    }
    PadicNum value = PadicNum::from_residue(p, K, sum);
    if (qK) {
      const PadicNum one(p, K, 1);
      value = value * (one + *qK) * (one + qK->pow(static_cast<long long>(L))).inverse();
    }
    LevelSum level{N, value, kInfiniteValuation};
    if (!out.levels.empty()) level.diffValuation = diff_valuation(value, out.levels.back().value);
    out.levels.push_back(level);
    out.value = value;
    out.level = N;
    out.points = L;
    out.stabilization = out.levels.size() > 1 ? level.diffValuation : 0;
    out.stabilized = out.levels.size() > 1 && level.diffValuation >= K;
    if (!fixedLevel && N >= cfg.minLevel && out.stabilized) break;
  }
  return out;
}

}  // namespace

FermionicResult fermionic_integral(const IntegrandSpec& f, const FermionicMeasure& measure, std::uint64_t p, int N,
                                   int K, const FermionicConfig& cfg) {
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  return sweep_1d(f, measure, p, K, cfg, N);
}

FermionicResult fermionic_integral_stabilized(const IntegrandSpec& f, const FermionicMeasure& measure,
                                              std::uint64_t p, int K, const FermionicConfig& cfg) {
  return sweep_1d(f, measure, p, K, cfg, std::nullopt);
}

// ---------------------------------------------------------------------------
// Multivariate Barnes integrand.
//
// With A_j = [w_j y_j]_q and P_j = q^{w_j y_j},
//   [x + sum_j w_j y_j]_q = [x] + q^x T_1,   T_j = A_j + P_j T_{j+1},  T_r = A_r,
// so every power of the bracket expands into products of per-axis moments
//   M_j[i][e] = sum_y chi(y) (-1)^y q^{a_j y} A_j(y)^i P_j(y)^e.

namespace {

class AxisMoments {
 public:
  AxisMoments(const ModArith& mod, const PadicNum& q, long long w, long long a, int degree,
              const std::optional<DirichletChar>& chi, int K)
      : mod_(mod), n_(degree) {
    const PadicNum qK = q.reduced(K);
    stepPower_ = qK.pow(w).residue();
    stepTwist_ = qK.pow(a).residue();
    wBracket_ = padic_qbracket_int(qK, w).residue();
    bracket_ = 0;
    power_ = 1 % mod.modulus();
    weight_ = 1 % mod.modulus();
    if (chi) {
      chiTable_.resize(chi->modulus());
      for (int m = 0; m < chi->modulus(); ++m) chiTable_[m] = mod.from_signed(chi->real_value(m));
    } else {
      chiTable_.assign(1, 1 % mod.modulus());
    }
    moments_.assign((n_ + 1) * (n_ + 1), 0);
    apow_.resize(n_ + 1);
    ppow_.resize(n_ + 1);
  }

  void advance_to(std::uint64_t L) {
    const std::size_t period = chiTable_.size();
    for (; y_ < L; ++y_) {
      const std::uint64_t c = chiTable_[y_ % period];
      if (c != 0) {
        const std::uint64_t wt = mod_.mul(c, weight_);
        apow_[0] = wt;
        ppow_[0] = 1 % mod_.modulus();
        for (int i = 1; i <= n_; ++i) {
          apow_[i] = mod_.mul(apow_[i - 1], bracket_);
          ppow_[i] = mod_.mul(ppow_[i - 1], power_);
        }
        for (int i = 0; i <= n_; ++i)
          for (int e = 0; i + e <= n_; ++e) {
            auto& slot = moments_[i * (n_ + 1) + e];
            slot = mod_.add(slot, mod_.mul(apow_[i], ppow_[e]));
          }
      }
      bracket_ = mod_.add(bracket_, mod_.mul(power_, wBracket_));
      power_ = mod_.mul(power_, stepPower_);
      weight_ = mod_.neg(mod_.mul(weight_, stepTwist_));
    }
  }

  std::uint64_t moment(int i, int e) const { return moments_[i * (n_ + 1) + e]; }

 private:
  ModArith mod_;
  int n_;
  std::uint64_t stepPower_, stepTwist_, wBracket_;
  std::uint64_t bracket_, power_, weight_;
  std::uint64_t y_ = 0;
  std::vector<std::uint64_t> chiTable_;
  std::vector<std::uint64_t> moments_;
  std::vector<std::uint64_t> apow_, ppow_;
};

void validate(const BarnesIntegrand& f, const FermionicConfig& cfg) {
  require_padic_q(f.q);
  const std::size_t r = f.w.size();
  if (r == 0 || f.a.size() != r)
    throw Error(ErrorKind::InvalidParameter, "weights and twists must both have length r >= 1");
  if (static_cast<int>(r) > cfg.maxOrder)
    throw Error(ErrorKind::WorkBoundExceeded,
                "order r = " + std::to_string(r) + " above the configured maximum " + std::to_string(cfg.maxOrder));
  if (f.degree < 0) throw Error(ErrorKind::InvalidParameter, "degree must be >= 0");
  if (f.x.prime() != f.q.prime()) throw Error(ErrorKind::InvalidParameter, "x and q over different primes");
}

// Combines per-axis moments into the level values for degrees 0..n.
std::vector<PadicNum> combine(const ModArith& mod, const std::vector<const AxisMoments*>& axes,
                              const BarnesIntegrand& f, int K) {
  const int n = f.degree;
  const std::uint64_t p = f.q.prime();
  std::vector<std::vector<std::uint64_t>> binom(n + 1);
  for (int k = 0; k <= n; ++k) {
    binom[k].assign(k + 1, 1 % mod.modulus());
    for (int i = 1; i < k; ++i) binom[k][i] = mod.add(binom[k - 1][i - 1], binom[k - 1][i]);
  }
  // V[k] = integral of T_j^k over axes j..r-1, built from the innermost axis out.
  const std::size_t r = axes.size();
  std::vector<std::uint64_t> V(n + 1);
  for (int k = 0; k <= n; ++k) V[k] = axes[r - 1]->moment(k, 0);
  for (std::size_t j = r - 1; j-- > 0;) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= k; ++i)
        next[k] = mod.add(next[k], mod.mul(mod.mul(binom[k][i], axes[j]->moment(i, k - i)), V[k - i]));
    V = std::move(next);
  }
  const PadicNum qK = f.q.reduced(K);
  const PadicNum xK = f.x.reduced(std::min(K, f.x.precision()));
  const std::uint64_t bx = padic_qbracket(qK, xK).reduced(K).residue();
  const std::uint64_t qx = padic_qpow(qK, xK).reduced(K).residue();
  std::vector<PadicNum> out;
  for (int m = 0; m <= n; ++m) {
    std::uint64_t acc = 0;
    std::uint64_t bxi = 1 % mod.modulus();
    for (int i = 0; i <= m; ++i) {
      const std::uint64_t qpart = mod.pow(qx, m - i);
      acc = mod.add(acc, mod.mul(mod.mul(binom[m][i], bxi), mod.mul(qpart, V[m - i])));
      bxi = mod.mul(bxi, bx);
    }
    out.push_back(PadicNum::from_residue(p, K, acc));
  }
  return out;
}

struct AxisSet {
  std::vector<AxisMoments> unique;
  std::vector<std::size_t> slot;  // axis j -> index in unique
};

AxisSet make_axes(const ModArith& mod, const BarnesIntegrand& f, int K) {
  AxisSet set;
  std::map<std::pair<long long, long long>, std::size_t> seen;
  for (std::size_t j = 0; j < f.w.size(); ++j) {
    auto key = std::make_pair(f.w[j], f.a[j]);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, set.unique.size()).first;
      set.unique.emplace_back(mod, f.q, f.w[j], f.a[j], f.degree, f.chi, K);
    }
    set.slot.push_back(it->second);
  }
  return set;
}

std::vector<const AxisMoments*> ordered(const AxisSet& set) {
  std::vector<const AxisMoments*> out;
  for (std::size_t s : set.slot) out.push_back(&set.unique[s]);
  return out;
}

}  // namespace

std::vector<PadicNum> fermionic_barnes_level(const BarnesIntegrand& f, int N, const FermionicConfig& cfg) {
  validate(f, cfg);
  const int K = f.q.precision();
  const ModArith mod(checked_prime_power(f.q.prime(), K));
  AxisSet axes = make_axes(mod, f, K);
  const std::uint64_t base = f.chi ? f.chi->modulus() : 1;
  const std::uint64_t L = level_length(base, f.q.prime(), N);
  if (L * axes.unique.size() > cfg.workBound)
    throw Error(ErrorKind::WorkBoundExceeded, "level " + std::to_string(N) + " exceeds the work bound");
  for (auto& ax : axes.unique) ax.advance_to(L);
  return combine(mod, ordered(axes), f, K);
}

FermionicResult fermionic_integral_multi(const BarnesIntegrand& f, int K, const FermionicConfig& cfg) {
  validate(f, cfg);
  if (K > f.q.precision()) throw Error(ErrorKind::InvalidParameter, "requested precision above that of q");
  const ModArith mod(checked_prime_power(f.q.prime(), K));
  AxisSet axes = make_axes(mod, f, K);
  const std::uint64_t p = f.q.prime();
  const std::uint64_t base = f.chi ? f.chi->modulus() : 1;

  FermionicResult out{PadicNum(p, K), 0, 0, false, 0, {}, {}};
  std::vector<PadicNum> previous;
  for (int N = 1; N <= cfg.maxLevel; ++N) {
    const std::uint64_t L = level_length(base, p, N);
    if (L * axes.unique.size() > cfg.workBound)
      throw Error(ErrorKind::WorkBoundExceeded, "no stabilization mod p^" + std::to_string(K) +
                                                    " before the work bound (reached level " +
                                                    std::to_string(N - 1) + ")");
    for (auto& ax : axes.unique) ax.advance_to(L);
    std::vector<PadicNum> values = combine(mod, ordered(axes), f, K);
    int worst = kInfiniteValuation;
    if (!previous.empty())
      for (std::size_t m = 0; m < values.size(); ++m) worst = std::min(worst, diff_valuation(values[m], previous[m]));
    out.levels.push_back({N, values.back(), previous.empty() ? 0 : worst});
    out.value = values.back();
    out.moments = values;
    out.level = N;
    out.points = L;
    out.stabilization = previous.empty() ? 0 : worst;
    out.stabilized = !previous.empty() && worst >= K;
    if (N >= cfg.minLevel && out.stabilized) break;
    previous = std::move(values);
  }
  if (!out.stabilized) throw Error(ErrorKind::WorkBoundExceeded, "level cap reached before stabilization");
  return out;
}

PadicNum fermionic_integral_multi_brute(const std::function<PadicNum(std::span<const long long>)>& f, int r,
                                        std::uint64_t p, int N, int K, long long base,
                                        const FermionicConfig& cfg) {
  if (r < 1) throw Error(ErrorKind::InvalidParameter, "r must be >= 1");
  const std::uint64_t L = level_length(static_cast<std::uint64_t>(base), p, N);
  unsigned __int128 total = 1;
  for (int j = 0; j < r; ++j) total *= L;
  if (total > cfg.workBound) throw Error(ErrorKind::WorkBoundExceeded, "brute-force lattice exceeds the work bound");
  std::vector<long long> xs(r, 0);
  PadicNum sum(p, K);
  while (true) {
    long long parity = 0;
    for (long long v : xs) parity += v;
    const PadicNum term = f(xs).reduced(K);
    sum += (parity % 2 == 0) ? term : -term;
    int j = r - 1;
    while (j >= 0 && ++xs[j] == static_cast<long long>(L)) xs[j--] = 0;
    if (j < 0) break;
  }
  return sum;
}

}  // namespace qbarnes

#include "lattice_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "qbarnes/acceleration.hpp"
#include "qbarnes/error.hpp"

namespace qbarnes::detail {

namespace {

using LC = LongComplex;
using LD = long double;

struct Axis {
  std::vector<LC> qpow;    // q^{w m}
  std::vector<LC> weight;  // chi(m) (-1)^m q^{a m} times any collapse coefficient
  std::vector<LD> bound;   // bound on |weight(m)|
  enum class Tail { geometric, binomial } tail = Tail::geometric;
  LD rho = 0;              // |q|^a
  LD scale = 1;            // constant factor in the geometric bound
  int binomialOrder = 1;

  std::vector<LD> tails;    // tail_from(m) for m <= qpow.size()

  void fill_tails() {
    tails.resize(qpow.size() + 1);
    for (std::size_t m = 0; m < tails.size(); ++m) tails[m] = tail_from(static_cast<int>(m));
  }

  /// Bound on sum_{k >= m} |weight(k)|.
  LD tail_from(int m) const {
    if (rho >= 1) return INFINITY;
    if (tail == Tail::geometric) return scale * std::pow(rho, static_cast<LD>(m)) / (1 - rho);
    // term(k) = C(k+r-1, r-1) rho^k; consecutive ratios decrease in k
    LD term = std::pow(rho, static_cast<LD>(m));
    for (int i = 1; i < binomialOrder; ++i) term *= static_cast<LD>(m + i) / i;
    LD head = 0;
    for (int k = m;; ++k) {
      const LD ratio = rho * (k + binomialOrder) / (k + 1);
      if (ratio < 1) return head + term / (1 - ratio);
      head += term;
      term *= ratio;
    }
  }
};

class Engine {
 public:
  Engine(const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg, const Leaf& leaf)
      : spec_(spec), cfg_(cfg), leaf_(leaf) {
    spec.validate();
    if (q.value() == Complex(0.0)) throw Error(ErrorKind::InvalidParameter, "lattice sums need q != 0");
    for (int a : spec.a)
      if (a < 0)
        throw Error(ErrorKind::NoConvergence,
                    "divergent: twist exponent " + std::to_string(a) + " < 0 makes the terms grow geometrically");
    logq_ = std::log(LC(q.value().real(), q.value().imag()));
    oneMinusQ_ = LC(1) - LC(q.value().real(), q.value().imag());
    invOneMinusQ_ = LC(1) / oneMinusQ_;
    qx_ = std::exp(LC(spec.x.real(), spec.x.imag()) * logq_);
    absq_ = std::abs(q.value());

    const LD qxAbs = std::abs(qx_);
    const LD denom = std::abs(oneMinusQ_);
    realBrackets_ = q.real_mode() && spec.x.imag() == 0.0;
    if (realBrackets_) {
      ymin_ = (1 - qxAbs) / denom;
      ymax_ = std::max<LD>(1, qxAbs) / denom;
    } else {
      ymin_ = (1 - qxAbs) / denom;
      ymax_ = (1 + qxAbs) / denom;
    }

    setup_leaf();
    direct_ = std::all_of(spec.a.begin(), spec.a.end(), [](int a) { return a >= 1; });
    build_axes();
  }

  LatticeResult run() {
    LatticeResult out = direct_ ? run_direct() : run_abel();
    const LD scale = std::pow(2.0L, static_cast<LD>(spec_.order()));
    for (auto& v : out.values) v *= scale;
    for (auto& e : out.errors) e *= static_cast<double>(scale);
    out.collapsed = collapsed_;
    return out;
  }

 private:
  void setup_leaf() {
    integerPower_ = -1;
    switch (leaf_.kind) {
      case Leaf::Kind::powers:
        outputs_ = leaf_.maxDegree + 1;
        for (int k = 0; k <= leaf_.maxDegree; ++k) leafBound_.push_back(std::pow(ymax_, static_cast<LD>(k)));
        break;
      case Leaf::Kind::negative_power: {
        outputs_ = 1;
        const LC s = leaf_.s;
        if (s.imag() == 0 && s.real() <= 0 && std::trunc(s.real()) == s.real()) {
          integerPower_ = static_cast<int>(-s.real());
          leafBound_.push_back(std::pow(ymax_, static_cast<LD>(integerPower_)));
        } else {
          if (ymin_ <= 0)
            throw Error(ErrorKind::InvalidParameter, "q-zeta needs |q^x| < 1, i.e. Re(x) > 0 for real q");
          const LD sr = s.real();
          const LD b = std::max(std::pow(ymin_, -sr), std::pow(ymax_, -sr)) *
                       std::exp(std::numbers::pi_v<LD> * std::abs(s.imag()));
          leafBound_.push_back(b);
        }
        break;
      }
      case Leaf::Kind::exponential:
        outputs_ = 1;
        if (realBrackets_ && leaf_.t.imag() == 0)
          leafBound_.push_back(std::exp(leaf_.t.real() * (leaf_.t.real() >= 0 ? ymax_ : std::max<LD>(ymin_, 0))));
        else
          leafBound_.push_back(std::exp(std::abs(leaf_.t) * ymax_));
        break;
    }
    leafMax_ = *std::max_element(leafBound_.begin(), leafBound_.end());
  }

  void eval_leaf(LC y, LC weight, std::vector<LC>& acc) const {
    switch (leaf_.kind) {
      case Leaf::Kind::powers: {
        LC p = weight;
        acc[0] += p;
        for (int k = 1; k < outputs_; ++k) {
          p *= y;
          acc[k] += p;
        }
        return;
      }
      case Leaf::Kind::negative_power:
        if (integerPower_ >= 0) {
          LC p = weight;
          for (int k = 0; k < integerPower_; ++k) p *= y;
          acc[0] += p;
        } else {
          if (std::abs(y) < 1e-12L) throw Error(ErrorKind::SmallDenominator, "q-bracket vanishes at a lattice point");
          acc[0] += weight * std::exp(-leaf_.s * std::log(y));
        }
        return;
      case Leaf::Kind::exponential:
        acc[0] += weight * std::exp(y * leaf_.t);
        return;
    }
  }

  int axis_length() const {
    return direct_ ? cfg_.maxTermsPerAxis : cfg_.maxTermsPerAxisAbel;
  }

  // Fills qpow/weight/bound for m < length.  `coef(m)` multiplies the
  // character-sign-twist weight; `coefBound(m)` bounds its magnitude.
  template <class Coef, class CoefBound>
  Axis make_axis(LD w, int a, bool withChi, int length, Coef coef, CoefBound coefBound) const {
    Axis ax;
    ax.qpow.resize(length);
    ax.weight.resize(length);
    ax.bound.resize(length);
    const LC stepLog = w * logq_;
    const LC twistLog = static_cast<LD>(a) * logq_;
    ax.rho = std::pow(static_cast<LD>(absq_), static_cast<LD>(a));
    for (int m = 0; m < length; ++m) {
      ax.qpow[m] = std::exp(static_cast<LD>(m) * stepLog);
      LC wt = (a == 0) ? LC(1) : std::exp(static_cast<LD>(m) * twistLog);
      if (m % 2) wt = -wt;
      if (withChi && spec_.chi) {
        const Complex c = (*spec_.chi)(m);
        wt *= LC(c.real(), c.imag());
      }
      ax.weight[m] = wt * coef(m);
      ax.bound[m] = std::pow(ax.rho, static_cast<LD>(m)) * coefBound(m);
    }
    return ax;
  }

  void build_axes() {
    const int r = spec_.order();
    const int length = axis_length();
    const bool equalWeights =
        std::all_of(spec_.w.begin(), spec_.w.end(), [&](double w) { return w == spec_.w.front(); });
    const bool equalTwists =
        std::all_of(spec_.a.begin(), spec_.a.end(), [&](int a) { return a == spec_.a.front(); });
    bool consecutive = true;
    for (int j = 1; j < r; ++j) consecutive = consecutive && spec_.a[j] == spec_.a[j - 1] - 1;

    if (cfg_.collapse && r > 1 && !spec_.chi && equalWeights && (equalTwists || consecutive)) {
      collapsed_ = true;
      period_ = 1;
      const LD w = spec_.w.front();
      if (equalTwists) {
        // sum over compositions of M into r parts: C(M+r-1, M) q^{c M}
        std::vector<LD> binom(length);
        binom[0] = 1;
        for (int m = 1; m < length; ++m) binom[m] = binom[m - 1] * (m + r - 1) / m;
        Axis ax = make_axis(w, spec_.a.front(), false, length, [&](int m) { return LC(binom[m]); },
                            [&](int m) { return binom[m]; });
        ax.tail = Axis::Tail::binomial;
        ax.binomialOrder = r;
        axes_.push_back(std::move(ax));
        binomialGrowth_ = r - 1;
      } else {
        // compositions weighted by q^{sum (h-j) m_j}: C(M+r-1, r-1)_q q^{(h-r) M}
        const LC q = std::exp(logq_);
        std::vector<LC> qbin(length);
        qbin[0] = 1;
        for (int m = 1; m < length; ++m) {
          const LC num = LC(1) - std::exp(static_cast<LD>(m + r - 1) * logq_);
          const LC den = LC(1) - std::exp(static_cast<LD>(m) * logq_);
          qbin[m] = qbin[m - 1] * num / den;
        }
        (void)q;
        LD bound = 1;
        for (int k = 1; k < r; ++k) bound /= (1 - std::pow(static_cast<LD>(absq_), static_cast<LD>(k)));
        Axis ax = make_axis(w, spec_.a.back(), false, length, [&](int m) { return qbin[m]; },
                            [&](int) { return bound; });
        ax.scale = bound;
        axes_.push_back(std::move(ax));
      }
      return;
    }
    period_ = spec_.chi ? spec_.chi->modulus() : 1;
    for (int j = 0; j < r; ++j)
      axes_.push_back(make_axis(spec_.w[j], spec_.a[j], true, length, [](int) { return LC(1); },
                                [](int) { return LD(1); }));
  }

  // ---- absolutely convergent case ------------------------------------------

  void direct_rec(std::size_t j, LC Q, LC W, LD Wb, std::vector<LC>& acc) {
    const Axis& ax = axes_[j];
    const int cap = static_cast<int>(ax.qpow.size());
    for (int m = 0;; ++m) {
      const LD tailW = Wb * ax.tails[m] * inner_[j + 1];
      if (tailW * leafMax_ < tau_) {
        errW_ += tailW;
        return;
      }
      if (m >= cap) {
        if (tailW * leafMax_ > cfg_.tolerance)
          throw Error(ErrorKind::NoConvergence, "per-axis cap " + std::to_string(cap) + " reached with tail bound " +
                                                    std::to_string(static_cast<double>(tailW * leafMax_)));
        errW_ += tailW;
        return;
      }
      const LC Wm = W * ax.weight[m];
      const LC Qm = Q * ax.qpow[m];
      if (j + 1 == axes_.size()) {
        if (Wm != LC(0)) eval_leaf((LC(1) - Qm) * invOneMinusQ_, Wm, acc);
        if (++terms_ > cfg_.workBudget)
          throw Error(ErrorKind::NoConvergence, "work budget exhausted before the tail bound met the tolerance");
      } else {
        direct_rec(j + 1, Qm, Wm, Wb * ax.bound[m], acc);
      }
    }
  }

  LatticeResult run_direct() {
    for (Axis& ax : axes_) ax.fill_tails();
    inner_.assign(axes_.size() + 1, 1);
    for (std::size_t j = axes_.size(); j-- > 0;) inner_[j] = inner_[j + 1] * axes_[j].tail_from(0);
    tau_ = cfg_.tolerance * 1e-3L;
    for (int attempt = 0; attempt < 10; ++attempt) {
      std::vector<LC> acc(outputs_, LC(0));
      errW_ = 0;
      terms_ = 0;
      direct_rec(0, qx_, LC(1), 1, acc);
      LD worst = 0;
      std::vector<double> errors(outputs_);
      for (int k = 0; k < outputs_; ++k) {
        const LD err = errW_ * leafBound_[k];
        errors[k] = static_cast<double>(err);
        worst = std::max(worst, err / (cfg_.tolerance * std::max<LD>(1, std::abs(acc[k]))));
      }
      if (worst <= 1) return {acc, errors, SumMethod::direct, terms_, false};
      tau_ /= 2 * worst;
    }
    throw Error(ErrorKind::NoConvergence, "tail bound did not reach the tolerance");
  }

  // ---- Abel-regularized case -----------------------------------------------

  void box_rec(std::size_t j, LC Q, LC W, const std::vector<std::vector<LC>>& wts, std::vector<LC>& acc) {
    const Axis& ax = axes_[j];
    const auto& wt = wts[j];
    const int len = static_cast<int>(wt.size());
    for (int m = 0; m < len; ++m) {
      const LC Wm = W * wt[m];
      if (Wm == LC(0)) continue;
      const LC Qm = Q * ax.qpow[m];
      if (j + 1 == axes_.size()) {
        eval_leaf((LC(1) - Qm) * invOneMinusQ_, Wm, acc);
        ++terms_;
      } else {
        box_rec(j + 1, Qm, Wm, wts, acc);
      }
    }
  }

  LatticeResult run_abel() {
    const int r = static_cast<int>(axes_.size());
    LD magnitude = leafMax_ * std::pow(2.0L, static_cast<LD>(r));
    if (binomialGrowth_ > 0) magnitude *= std::pow(60.0L, static_cast<LD>(binomialGrowth_));
    for (const Axis& ax : axes_)
      if (ax.tail == Axis::Tail::geometric) magnitude *= ax.scale;
    const int nc = cvz_terms(static_cast<double>(std::min<LD>(magnitude, 1e300L)), cfg_.tolerance * 0.1);
    const int len = period_ * nc;
    if (len > static_cast<int>(axes_.front().qpow.size()))
      throw Error(ErrorKind::NoConvergence, "accelerated axis length above the configured cap");
    const long double points = std::pow(static_cast<long double>(len), r);
    const auto& sched = cfg_.abelSchedule;
    const int use = std::min<int>(static_cast<int>(sched.size()), cfg_.richardsonOrder + 2);
    if (use < 2) throw Error(ErrorKind::InvalidParameter, "Abel schedule needs at least two points");
    if (points * use > static_cast<long double>(cfg_.workBudget))
      throw Error(ErrorKind::NoConvergence, "regularized lattice exceeds the work budget");

    const std::vector<LD> cvz = cvz_weights(nc);
    std::vector<std::vector<LC>> samples(outputs_);
    terms_ = 0;
    for (std::size_t i = sched.size() - use; i < sched.size(); ++i) {
      const LD t = 1 - std::ldexp(1.0L, -sched[i]);
      std::vector<std::vector<LC>> wts(r, std::vector<LC>(len));
      for (int j = 0; j < r; ++j) {
        LD tm = 1;
        for (int m = 0; m < len; ++m) {
          const int k = m / period_;
          const LD c = (k % 2 ? -cvz[k] : cvz[k]) * tm;
          wts[j][m] = axes_[j].weight[m] * c;
          tm *= t;
        }
      }
      std::vector<LC> acc(outputs_, LC(0));
      box_rec(0, qx_, LC(1), wts, acc);
      for (int k = 0; k < outputs_; ++k) samples[k].push_back(acc[k]);
    }
    LatticeResult out;
    out.method = SumMethod::abel;
    out.terms = terms_;
    for (int k = 0; k < outputs_; ++k) {
      const std::vector<LC> diag = richardson_diagonal(samples[k], cfg_.richardsonOrder);
      const LC last = diag.back();
      const LD spread = std::abs(last - diag[diag.size() - 2]);
      const LD relative = spread / std::max<LD>(1, std::abs(last));
      if (relative > cfg_.abelTolerance) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "Abel extrapolants disagree by %.3g (relative)", static_cast<double>(relative));
        throw Error(ErrorKind::NoConvergence, buf);
      }
      out.values.push_back(last);
      out.errors.push_back(static_cast<double>(spread));
    }
    return out;
  }

  const BarnesSpec& spec_;
  const SumConfig& cfg_;
  const Leaf& leaf_;
  LC logq_, oneMinusQ_, invOneMinusQ_, qx_;
  double absq_ = 0;
  LD ymin_ = 0, ymax_ = 0;
  int outputs_ = 1;
  int integerPower_ = -1;
  std::vector<LD> leafBound_;
  LD leafMax_ = 1;
  bool direct_ = true;
  bool realBrackets_ = false;
  bool collapsed_ = false;
  int binomialGrowth_ = 0;
  int period_ = 1;
  std::vector<Axis> axes_;
  std::vector<LD> inner_;
  LD tau_ = 0, errW_ = 0;
  std::uint64_t terms_ = 0;
};

}  // namespace

LatticeResult lattice_sum(const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg, const Leaf& leaf) {
  return Engine(spec, q, cfg, leaf).run();
}

}  // namespace qbarnes::detail

// One PASS/FAIL line per acceptance criterion.  Numerical tolerances live in
// the check functions; runtime limits are pinned here.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qbarnes/verify.hpp"

using namespace qbarnes;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::function<SuiteReport(const SuiteOptions&)> run;
  double secondsLimit;  // 0: no runtime limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed form vs lattice series", check_closed_vs_series, 60.0},
      {2, "q-zeta at -n vs closed form", check_interpolation, 30.0},
      {3, "p-adic Riemann sums vs exact closed form", check_padic_consistency, 120.0},
      {4, "fermionic shift equation", check_functional_equation, 0.0},
      {5, "distribution relations", check_distribution, 0.0},
      {6, "character recurrence", check_character_recurrence, 0.0},
      {7, "classical Barnes zeta", check_classical_barnes, 0.0},
      {8, "Mellin transform of the generating function", check_mellin, 30.0},
      {9, "q -> 1 degeneration", check_degeneration, 0.0},
      {10, "q-binomial identities", check_qcore_identities, 0.0},
  };
  SuiteOptions opt;
  int failed = 0;
  for (const Criterion& c : criteria) {
    const SuiteReport rep = c.run(opt);
    const bool inTime = c.secondsLimit == 0.0 || rep.seconds < c.secondsLimit;
    const bool ok = rep.passed() && inTime;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.1f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, rep.seconds,
                inTime ? "" : ", over the time limit");
    for (const Check& ch : rep.checks)
      std::printf("    [%s] %s  deviation=%.3g tolerance=%.3g cases=%d skipped=%d%s%s\n", ch.pass ? "ok" : "FAIL",
                  ch.name.c_str(), ch.deviation, ch.tolerance, ch.cases, ch.skipped, ch.detail.empty() ? "" : "  ",
                  ch.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

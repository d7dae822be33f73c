#pragma once

// Executable identity checks.  Each suite evaluates both sides of a family
// of identities by independent routes and reports the worst deviation.

#include <string>
#include <string_view>
#include <vector>

#include "qbarnes/qeuler.hpp"

namespace qbarnes {

struct Check {
  /// The identity, named by what it states.
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int cases = 0;
  /// Cases left out, with the reason in `detail`.
  int skipped = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct SuiteOptions {
  int nMax = 6;
  SumConfig sum;
};

// One suite per group of identities.
SuiteReport check_closed_vs_series(const SuiteOptions& opt = {});
SuiteReport check_interpolation(const SuiteOptions& opt = {});
SuiteReport check_padic_consistency(const SuiteOptions& opt = {});
SuiteReport check_functional_equation(const SuiteOptions& opt = {});
SuiteReport check_distribution(const SuiteOptions& opt = {});
SuiteReport check_character_recurrence(const SuiteOptions& opt = {});
SuiteReport check_classical_barnes(const SuiteOptions& opt = {});
SuiteReport check_mellin(const SuiteOptions& opt = {});
SuiteReport check_degeneration(const SuiteOptions& opt = {});
SuiteReport check_qcore_identities(const SuiteOptions& opt = {});

/// Grid used by the interpolation suite: direct cells (all twists 1) for
/// r <= 3 and Abel cells (twists 0) for r = 1, with and without characters.
std::vector<BarnesSpec> interpolation_grid();

/// Named suites for the command line: identities, distribution,
/// interpolation, mellin, padic-consistency.
std::vector<std::string_view> suite_names();
/// Throws InvalidParameter for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& opt = {});

}  // namespace qbarnes

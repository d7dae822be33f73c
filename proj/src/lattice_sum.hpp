#pragma once

// Shared engine for the twisted lattice sums behind q_euler_series,
// q_euler_genfun and q_zeta.

#include <cstdint>
#include <vector>

#include "qbarnes/qeuler.hpp"

namespace qbarnes::detail {

/// Function applied to the bracket y = [x + sum w_j m_j]_q at each lattice point.
struct Leaf {
  enum class Kind { powers, negative_power, exponential } kind = Kind::powers;
  int maxDegree = 0;       // powers: y^0..y^maxDegree
  LongComplex s{0};        // negative_power: y^{-s}
  LongComplex t{0};        // exponential: e^{y t}
};

struct LatticeResult {
  std::vector<LongComplex> values;  // includes the 2^r factor
  std::vector<double> errors;
  SumMethod method = SumMethod::direct;
  std::uint64_t terms = 0;
  bool collapsed = false;
};

LatticeResult lattice_sum(const BarnesSpec& spec, const ComplexQ& q, const SumConfig& cfg, const Leaf& leaf);

}  // namespace qbarnes::detail

#pragma once

// Summation helpers for alternating series.

#include <vector>

#include "qbarnes/numeric.hpp"

namespace qbarnes {

/// Weights c_k (k < n) with sum_k (-1)^k a_k ~= sum_k c_k a_k, following
/// Cohen, Rodriguez Villegas and Zagier.  The sign (-1)^k is folded in.
/// For moment sequences the error decays like 5.83^{-n}; a divergent
/// alternating series of geometric or polynomial type is mapped to its Abel sum.
std::vector<long double> cvz_weights(int n);

/// Number of CVZ terms for a target relative accuracy given an a-priori
/// bound on the sequence magnitude.
int cvz_terms(double magnitude, double tol, int minTerms = 8, int maxTerms = 60);

/// Richardson table for samples A(h_k), h_k = h_0 2^{-k}, assuming an
/// expansion in integer powers of h.  Returns the diagonal R_{k,min(k,order)}.
template <class T>
std::vector<T> richardson_diagonal(const std::vector<T>& samples, int order) {
  std::vector<std::vector<T>> table(samples.size());
  std::vector<T> out;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    table[k].push_back(samples[k]);
    const int depth = std::min<int>(static_cast<int>(k), order);
    long double factor = 1;
    for (int j = 1; j <= depth; ++j) {
      factor *= 2;
      table[k].push_back(table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / T(factor - 1));
    }
    out.push_back(table[k].back());
  }
  return out;
}

}  // namespace qbarnes

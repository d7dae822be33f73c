#include "qbarnes/acceleration.hpp"

#include <algorithm>
#include <cmath>

namespace qbarnes {

std::vector<long double> cvz_weights(int n) {
  std::vector<long double> w(n);
  long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(n));
  d = (d + 1 / d) / 2;
  long double b = -1, c = -d;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    w[k] = c / d;
    b = b * (k + n) * (k - n) / ((k + 0.5L) * (k + 1));
  }
  return w;
}

int cvz_terms(double magnitude, double tol, int minTerms, int maxTerms) {
  const double need = std::log(std::max(magnitude, 1.0)) + std::log(1.0 / tol) + 2.0;
  const int n = static_cast<int>(std::ceil(need / std::log(3.0 + std::sqrt(8.0))));
  return std::clamp(n, minTerms, maxTerms);
}

}  // namespace qbarnes

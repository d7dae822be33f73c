#pragma once

#include "qbarnes/numeric.hpp"

namespace qbarnes {

/// Gamma function on the complex plane (Lanczos, g = 7, with reflection for
/// Re s < 1/2).  Relative error about 1e-15 away from the poles; throws
/// PoleOfGamma at s = 0, -1, -2, ...
Complex complex_gamma(Complex s);

}  // namespace qbarnes

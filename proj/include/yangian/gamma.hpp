#ifndef YANGIAN_GAMMA_HPP
#define YANGIAN_GAMMA_HPP

#include "yangian/rational.hpp"

namespace yangian {

/// Gamma-function quotient Gamma(z+m)/Gamma(z) at integer offset m, as an
/// exact rising (m >= 0) or reciprocal falling (m < 0) factorial:
///   m >= 0:  prod_{i=0}^{m-1} (z+i)      (a zero factor yields 0, no error)
///   m <  0:  1 / prod_{i=1}^{-m} (z-i)   (a zero factor is a division by zero)
Rational gamma_ratio(const Rational& z, long m);

}  // namespace yangian

#endif  // YANGIAN_GAMMA_HPP

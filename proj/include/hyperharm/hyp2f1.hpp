#pragma once
// Gauss hypergeometric 2F1(a,b;c;x) for complex parameters and real x <= 0.

#include "hyperharm/numerics.hpp"

namespace hh::num {

// Evaluation uses the Pfaff map y = x/(x-1) in [0,1). The transformed series
// is summed directly when it is small and numerically safe; otherwise the
// y -> 1-y connection formula is applied with w = 1/(1-x), including the
// logarithmic case when the connection parameter is an integer. The (a,b)
// pair is ordered canonically first, so hyp2f1(a,b,..) == hyp2f1(b,a,..)
// bit for bit. Throws NumericError if no branch reaches tolerance within
// the term cap, DomainError for x > 0 or c a non-positive integer.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);

}  // namespace hh::num

#pragma once
// Complex log-Gamma and digamma on the principal branch.

#include "hyperharm/numerics.hpp"

namespace hh::num {

// Principal branch of log Gamma (real on the positive axis, satisfies
// log Gamma(z) = log Gamma(z+1) - Log z with the principal Log).
// Throws NumericError at non-positive integers.
Complex gamma_ln(Complex z);

Complex digamma(Complex z);

// z within tol of {0, -1, -2, ...}
bool near_nonpositive_integer(Complex z, double tol = 1e-12);

// 1/Gamma(z), zero at the poles.
Complex reciprocal_gamma(Complex z);

}  // namespace hh::num

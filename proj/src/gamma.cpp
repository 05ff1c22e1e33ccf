#include "hyperharm/gamma.hpp"

#include <cmath>

namespace hh::num {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

Complex gamma_ln_right(Complex z) {
  // requires Re z >= 0.5
  const Complex zm1 = z - 1.0;
  Complex x(kLanczos[0]);
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
  const Complex t = zm1 + 7.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool near_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

Complex gamma_ln(Complex z) {
  require_finite(z, "gamma_ln");
  if (near_nonpositive_integer(z))
    throw NumericError("gamma_ln: pole at non-positive integer");
  if (z.real() >= 0.5) return gamma_ln_right(z);
  // Shift into the right half-plane; principal logs keep the standard branch.
  Complex acc(0.0);
  Complex w = z;
  while (w.real() < 0.5) {
    acc += std::log(w);
    w += 1.0;
  }
  return gamma_ln_right(w) - acc;
}

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  if (near_nonpositive_integer(z)) throw NumericError("digamma: pole at non-positive integer");
  Complex acc(0.0);
  Complex w = z;
  while (w.real() < 20.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  const Complex zi = 1.0 / w;
  const Complex zi2 = zi * zi;
  // psi(w) ~ log w - 1/(2w) - sum B_{2n} / (2n w^{2n})
  const Complex tail =
      zi2 * (1.0 / 12.0 -
             zi2 * (1.0 / 120.0 -
                    zi2 * (1.0 / 252.0 -
                           zi2 * (1.0 / 240.0 -
                                  zi2 * (1.0 / 132.0 - zi2 * (691.0 / 32760.0))))));
  return acc + std::log(w) - 0.5 * zi - tail;
}

Complex reciprocal_gamma(Complex z) {
  if (near_nonpositive_integer(z)) return Complex(0.0);
  return std::exp(-gamma_ln(z));
}

}  // namespace hh::num

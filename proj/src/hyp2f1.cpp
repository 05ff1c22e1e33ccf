#include "hyperharm/hyp2f1.hpp"

#include <cmath>

#include "hyperharm/gamma.hpp"

namespace hh::num {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-17;

Complex series_2f1(Complex A, Complex B, Complex C, double w) {
  Complex term(1.0), sum(1.0);
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (A + kk) * (B + kk) / ((C + kk) * (kk + 1.0)) * w;
    sum += term;
    if (std::abs(term) <= kTermTol * std::abs(sum)) return sum;
  }
  throw NumericError("hyp2f1: series did not converge within term cap");
}

bool near_int(Complex z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

// F(A,B;C;y) with C-A-B = m a non-negative integer, w = 1-y.
// Logarithmic connection expansion (classical z -> 1-z degenerate case).
Complex series_log_case(Complex A, Complex B, Complex C, double w, double lnw) {
  const int m = static_cast<int>(std::round((C - A - B).real()));
  const Complex gC = gamma_ln(C);
  if (m == 0) {
    const Complex pref = std::exp(gC - gamma_ln(A) - gamma_ln(B));
    Complex term(1.0), sum(0.0);
    Complex psA = digamma(A), psB = digamma(B);
    Complex ps1 = digamma(Complex(1.0));
    for (int k = 0; k < kMaxTerms; ++k) {
      const double kk = static_cast<double>(k);
      const Complex coef = 2.0 * ps1 - psA - psB - lnw;
      sum += term * coef;
      term *= (A + kk) * (B + kk) / ((kk + 1.0) * (kk + 1.0)) * w;
      ps1 += 1.0 / (kk + 1.0);
      psA += 1.0 / (A + kk);
      psB += 1.0 / (B + kk);
      if (std::abs(term) * (std::abs(coef) + 3.0) <= kTermTol * std::abs(sum))
        return pref * sum;
    }
    throw NumericError("hyp2f1: logarithmic series (m=0) did not converge");
  }
  // finite part
  Complex s1(0.0), term(1.0);
  for (int k = 0; k < m; ++k) {
    s1 += term;
    if (k + 1 < m) {
      const double kk = static_cast<double>(k);
      term *= (A + kk) * (B + kk) / ((kk + 1.0) * (1.0 - m + kk)) * w;
    }
  }
  const Complex part1 =
      std::exp(gamma_ln(Complex(m)) + gC - gamma_ln(A + static_cast<double>(m)) -
               gamma_ln(B + static_cast<double>(m))) *
      s1;
  // logarithmic part
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const Complex pref2 =
      sign * std::exp(gC - gamma_ln(A) - gamma_ln(B) + m * lnw);
  Complex psA = digamma(A + static_cast<double>(m));
  Complex psB = digamma(B + static_cast<double>(m));
  Complex ps1 = digamma(Complex(1.0));
  Complex psm = digamma(Complex(m + 1.0));
  double mfac = 1.0;
  for (int k = 2; k <= m; ++k) mfac *= k;
  term = Complex(1.0 / mfac);
  Complex s2(0.0);
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    const Complex coef = lnw - ps1 - psm + psA + psB;
    s2 += term * coef;
    term *= (A + m + kk) * (B + m + kk) / ((kk + 1.0) * (kk + m + 1.0)) * w;
    ps1 += 1.0 / (kk + 1.0);
    psm += 1.0 / (kk + m + 1.0);
    psA += 1.0 / (A + m + kk);
    psB += 1.0 / (B + m + kk);
    const double scale = std::max(std::abs(s2), 1e-300);
    if (std::abs(term) * (std::abs(coef) + 3.0) <= kTermTol * scale) break;
  }
  return part1 - pref2 * s2;
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, double x) {
  require_finite(a, "hyp2f1 a");
  require_finite(b, "hyp2f1 b");
  require_finite(c, "hyp2f1 c");
  if (x > 0.0) throw DomainError("hyp2f1: implemented for x <= 0 only");
  if (near_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  if (x == 0.0) return Complex(1.0);
  // canonical order makes the a<->b symmetry exact
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);

  const double y = x / (x - 1.0);
  const double log1mx = std::log1p(-x);  // log(1-x), exact sign
  // Pfaff variant with Re(C-A-B) >= 0
  Complex A, B, pf, s;
  if ((b - a).real() >= 0.0) {
    A = a;
    B = c - b;
    pf = -a;
    s = b - a;
  } else {
    A = b;
    B = c - a;
    pf = -b;
    s = a - b;
  }
  const Complex C = c;
  const Complex pref = std::exp(pf * log1mx);

  const bool terminating = near_nonpositive_integer(A) || near_nonpositive_integer(B);
  if (terminating) return pref * series_2f1(A, B, C, y);

  // direct series when the oscillatory hump keeps enough digits
  const double lam = std::abs(A.imag()) + std::abs(B.imag());
  if (y <= 0.6 && lam * std::sqrt(y) <= 14.0) return pref * series_2f1(A, B, C, y);

  const double w = 1.0 / (1.0 - x);  // = 1-y without cancellation
  const double lnw = -log1mx;
  if (near_int(s, 1e-9)) return pref * series_log_case(A, B, C, w, lnw);

  const Complex g = gamma_ln(C);
  Complex t1(0.0), t2(0.0);
  if (!near_nonpositive_integer(C - A) && !near_nonpositive_integer(C - B))
    t1 = std::exp(g + gamma_ln(s) - gamma_ln(C - A) - gamma_ln(C - B)) *
         series_2f1(A, B, 1.0 - s, w);
  t2 = std::exp(g + gamma_ln(-s) - gamma_ln(A) - gamma_ln(B) + s * lnw) *
       series_2f1(C - A, C - B, 1.0 + s, w);
  return pref * (t1 + t2);
}

}  // namespace hh::num

#pragma once
// Deterministic numerical primitives: compensated summation, fixed quadrature
// rules, complex polynomials, divided differences.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad mathematical state: poles, non-convergence, NaN contamination.
class NumericError : public Error {
public:
  using Error::Error;
};

// Invalid argument / unsupported parameter combination.
class DomainError : public Error {
public:
  using Error::Error;
};

// Missing prerequisite (e.g. uncalibrated constants).
class StateError : public Error {
public:
  using Error::Error;
};

namespace num {

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
void require_finite(Complex z, const char* what);

// Kahan-compensated accumulator. Deterministic for a fixed add() order.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanCSum {
  KahanSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

enum class RuleKind { Trapezoid, GaussLegendre };

// Fixed quadrature rule on an interval. Nodes/weights are frozen at
// construction; integrate() always reduces in ascending node order with
// Kahan compensation, so results do not depend on caller parallelism.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 1.0;
  RuleKind kind = RuleKind::Trapezoid;

  static QuadratureRule trapezoid(double a, double b, std::size_t intervals);
  static QuadratureRule gauss_legendre(double a, double b, std::size_t order);
  std::size_t size() const { return nodes.size(); }
};

Complex integrate(const QuadratureRule& rule, std::span<const Complex> samples);
double integrate(const QuadratureRule& rule, std::span<const double> samples);

// Complex polynomial, coefficients in ascending degree order.
class Polynomial {
public:
  Polynomial() : coef_{Complex(0.0)} {}
  explicit Polynomial(std::vector<Complex> coef);
  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial monic_from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coef_; }
  Complex operator()(Complex z) const;
  Polynomial derivative() const;
  Polynomial reflected() const;  // q(nu) = p(-nu)
  Polynomial operator*(const Polynomial& rhs) const;
  bool is_one() const;

private:
  std::vector<Complex> coef_;
};

// Quotient h#(nu_i) = (h(nu_i) - h(nu0)) / (nu_i - nu0) on a sampled line.
// h must vanish at nu0 (tolerance vanish_tol * max(1, max|h|)); at nodes
// closer than near_tol to nu0 a centered-difference derivative from the
// neighbouring nodes is substituted.
std::vector<Complex> divided_difference(std::span<const Complex> nu,
                                        std::span<const Complex> h, Complex nu0,
                                        double vanish_tol = 1e-8,
                                        double near_tol = 1e-6);

// Static-partition parallel map: fn(begin, end) over [0, n) split across
// `threads` workers. Output slots must be disjoint per index; reductions
// stay with the caller so summation order is unaffected by thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace num
}  // namespace hh

#include "hyperharm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace hh::num {

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw NumericError(std::string("non-finite value in ") + what);
}

QuadratureRule QuadratureRule::trapezoid(double a, double b, std::size_t intervals) {
  if (intervals == 0 || !(b > a)) throw DomainError("trapezoid: bad interval");
  QuadratureRule r;
  r.a = a;
  r.b = b;
  r.kind = RuleKind::Trapezoid;
  const double h = (b - a) / static_cast<double>(intervals);
  r.nodes.resize(intervals + 1);
  r.weights.assign(intervals + 1, h);
  for (std::size_t i = 0; i <= intervals; ++i) r.nodes[i] = a + h * static_cast<double>(i);
  r.weights.front() = 0.5 * h;
  r.weights.back() = 0.5 * h;
  return r;
}

QuadratureRule QuadratureRule::gauss_legendre(double a, double b, std::size_t order) {
  if (order == 0 || !(b > a)) throw DomainError("gauss_legendre: bad parameters");
  QuadratureRule r;
  r.a = a;
  r.b = b;
  r.kind = RuleKind::GaussLegendre;
  r.nodes.resize(order);
  r.weights.resize(order);
  const std::size_t m = (order + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(order) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    r.nodes[i] = mid - half * x;
    r.nodes[order - 1 - i] = mid + half * x;
    r.weights[i] = half * w;
    r.weights[order - 1 - i] = half * w;
  }
  return r;
}

Complex integrate(const QuadratureRule& rule, std::span<const Complex> samples) {
  if (samples.size() != rule.size()) throw DomainError("integrate: sample/node length mismatch");
  KahanCSum acc;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Complex term = rule.weights[i] * samples[i];
    if (!is_finite(term)) throw NumericError("integrate: non-finite sample");
    acc.add(term);
  }
  return acc.value();
}

double integrate(const QuadratureRule& rule, std::span<const double> samples) {
  if (samples.size() != rule.size()) throw DomainError("integrate: sample/node length mismatch");
  KahanSum acc;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double term = rule.weights[i] * samples[i];
    if (!std::isfinite(term)) throw NumericError("integrate: non-finite sample");
    acc.add(term);
  }
  return acc.value();
}

Polynomial::Polynomial(std::vector<Complex> coef) : coef_(std::move(coef)) {
  if (coef_.empty()) coef_.push_back(Complex(0.0));
  while (coef_.size() > 1 && coef_.back() == Complex(0.0)) coef_.pop_back();
}

Polynomial Polynomial::monic_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += -r * c[i];
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * z + coef_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coef_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coef_.size() - 1);
  for (std::size_t i = 1; i < coef_.size(); ++i) d[i - 1] = static_cast<double>(i) * coef_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<Complex> c = coef_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::vector<Complex> c(coef_.size() + rhs.coef_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coef_.size(); ++j) c[i + j] += coef_[i] * rhs.coef_[j];
  return Polynomial(std::move(c));
}

bool Polynomial::is_one() const {
  return coef_.size() == 1 && coef_[0] == Complex(1.0);
}

std::vector<Complex> divided_difference(std::span<const Complex> nu,
                                        std::span<const Complex> h, Complex nu0,
                                        double vanish_tol, double near_tol) {
  if (nu.size() != h.size() || nu.size() < 3)
    throw DomainError("divided_difference: need matching samples, >= 3 nodes");
  // locate the node nearest nu0 and the local grid spacing
  std::size_t i0 = 0;
  double best = std::abs(nu[0] - nu0);
  for (std::size_t i = 1; i < nu.size(); ++i) {
    double d = std::abs(nu[i] - nu0);
    if (d < best) {
      best = d;
      i0 = i;
    }
  }
  double spacing = std::abs(nu[1] - nu[0]);
  if (best > spacing * (1.0 + 1e-9))
    throw DomainError("divided_difference: nu0 not within one grid cell of the samples");
  double scale = 1.0;
  for (Complex v : h) scale = std::max(scale, std::abs(v));
  const Complex h0 = h[i0];
  if (std::abs(h0) > vanish_tol * scale)
    throw NumericError("divided_difference: sampled function does not vanish at nu0");

  std::vector<Complex> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Complex d = nu[i] - nu0;
    if (std::abs(d) <= near_tol) {
      // derivative estimate, the discretization of int_0^1 h'(nu0 + s(nu-nu0)) ds
      std::size_t lo = (i > 0) ? i - 1 : i;
      std::size_t hi = (i + 1 < h.size()) ? i + 1 : i;
      out[i] = (h[hi] - h[lo]) / (nu[hi] - nu[lo]);
    } else {
      out[i] = (h[i] - h0) / d;
    }
  }
  return out;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t nw = threads <= 1 ? 1 : std::min<std::size_t>(threads, n);
  if (nw == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw);
  const std::size_t chunk = (n + nw - 1) / nw;
  std::exception_ptr err;
  std::mutex err_mu;
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        std::scoped_lock lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hh::num

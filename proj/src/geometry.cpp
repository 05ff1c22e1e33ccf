#include "hyperharm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hh::geom {

namespace {

constexpr double kBallEdge = 1.0 - 1e-14;
constexpr double kMinY = 1e-300;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

void check_point(const HyperbolicPoint& x) {
  switch (x.model) {
    case Model::Polar:
      if (x.data.size() != static_cast<std::size_t>(x.p) + 1 || x.data[0] < 0.0)
        throw DomainError("polar point: want [t>=0, omega]");
      break;
    case Model::Ball:
      if (x.data.size() != static_cast<std::size_t>(x.p)) throw DomainError("ball point: bad size");
      if (norm2(x.data) >= kBallEdge * kBallEdge)
        throw DomainError("ball point: |x| too close to the boundary sphere");
      break;
    case Model::Halfspace:
      if (x.data.size() != static_cast<std::size_t>(x.p)) throw DomainError("halfspace point: bad size");
      if (x.data[0] <= kMinY) throw DomainError("halfspace point: y underflow");
      break;
  }
}

}  // namespace

double ModelParams::boundary_area() const {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * p) / std::tgamma(0.5 * p);
}

BoundaryPoint::BoundaryPoint(std::vector<double> v) : b(std::move(v)) {
  if (b.size() < 2) throw DomainError("BoundaryPoint: dimension >= 2");
  if (std::abs(std::sqrt(norm2(b)) - 1.0) > 1e-14)
    throw DomainError("BoundaryPoint: |b| != 1");
}

BoundaryPoint BoundaryPoint::north(int p) {
  std::vector<double> v(p, 0.0);
  v.back() = 1.0;
  return BoundaryPoint(std::move(v));
}

HyperbolicPoint origin(const ModelParams& mp) {
  return HyperbolicPoint{Model::Ball, mp.p, std::vector<double>(mp.p, 0.0)};
}

HyperbolicPoint polar_point(double t, std::span<const double> omega) {
  HyperbolicPoint x{Model::Polar, static_cast<int>(omega.size()), {}};
  x.data.reserve(omega.size() + 1);
  x.data.push_back(t);
  const double nn = std::sqrt(norm2(omega));
  if (std::abs(nn - 1.0) > 1e-12) throw DomainError("polar_point: |omega| != 1");
  for (double w : omega) x.data.push_back(w / nn);
  check_point(x);
  return x;
}

HyperbolicPoint ball_point(std::span<const double> x) {
  HyperbolicPoint pt{Model::Ball, static_cast<int>(x.size()),
                     std::vector<double>(x.begin(), x.end())};
  check_point(pt);
  return pt;
}

HyperbolicPoint halfspace_point(double y, std::span<const double> xvec) {
  HyperbolicPoint pt{Model::Halfspace, static_cast<int>(xvec.size()) + 1, {}};
  pt.data.reserve(xvec.size() + 1);
  pt.data.push_back(y);
  for (double v : xvec) pt.data.push_back(v);
  check_point(pt);
  return pt;
}

namespace {

HyperbolicPoint to_ball(const HyperbolicPoint& x) {
  check_point(x);
  if (x.model == Model::Ball) return x;
  HyperbolicPoint out{Model::Ball, x.p, std::vector<double>(x.p, 0.0)};
  if (x.model == Model::Polar) {
    const double r = std::tanh(0.5 * x.data[0]);
    for (int i = 0; i < x.p; ++i) out.data[i] = r * x.data[i + 1];
  } else {
    // halfspace (y, xvec) -> ball; base (1,0) -> 0, y -> infinity is north
    const double y = x.data[0];
    double q = 0.0;
    for (int i = 1; i < x.p; ++i) q += x.data[i] * x.data[i];
    const double den = q + (y + 1.0) * (y + 1.0);
    for (int i = 1; i < x.p; ++i) out.data[i - 1] = 2.0 * x.data[i] / den;
    out.data[x.p - 1] = (q + y * y - 1.0) / den;
  }
  check_point(out);
  return out;
}

HyperbolicPoint ball_to(const HyperbolicPoint& x, Model target) {
  if (target == Model::Ball) return x;
  if (target == Model::Polar) {
    const double r = std::sqrt(norm2(x.data));
    HyperbolicPoint out{Model::Polar, x.p, {}};
    out.data.push_back(2.0 * std::atanh(r));
    if (r < 1e-300) {
      // direction is arbitrary at the base point
      for (int i = 0; i < x.p; ++i) out.data.push_back(i + 1 == x.p ? 1.0 : 0.0);
    } else {
      for (double v : x.data) out.data.push_back(v / r);
    }
    return out;
  }
  // ball -> halfspace (inverse Cayley)
  double q = norm2(x.data);
  const double last = x.data[x.p - 1];
  const double den = q - 2.0 * last + 1.0;  // |x - north|^2
  HyperbolicPoint out{Model::Halfspace, x.p, std::vector<double>(x.p, 0.0)};
  out.data[0] = (1.0 - q) / den;
  for (int i = 0; i + 1 < x.p; ++i) out.data[i + 1] = 2.0 * x.data[i] / den;
  check_point(out);
  return out;
}

}  // namespace

HyperbolicPoint convert(const HyperbolicPoint& x, Model target) {
  return ball_to(to_ball(x), target);
}

double polar_distance(const HyperbolicPoint& x) {
  if (x.model == Model::Polar) return x.data[0];
  if (x.model == Model::Ball) return 2.0 * std::atanh(std::sqrt(norm2(x.data)));
  // halfspace: cosh d = (y^2 + |xvec|^2 + 1) / (2y)
  const double y = x.data[0];
  double q = 0.0;
  for (std::size_t i = 1; i < x.data.size(); ++i) q += x.data[i] * x.data[i];
  return std::acosh(std::max(1.0, (y * y + q + 1.0) / (2.0 * y)));
}

double horocycle_bracket(const HyperbolicPoint& x, const BoundaryPoint& b,
                         const ModelParams& mp) {
  if (b.p() != mp.p) throw DomainError("horocycle_bracket: dimension mismatch");
  if (x.model == Model::Polar) {
    // Same ball formula, rearranged so no precision is lost at large t:
    // A = -log(cosh t - sinh t <omega,b>) = -log(e^{-t} + sinh t |omega-b|^2/2).
    const double t = x.data[0];
    double d2 = 0.0;
    for (int i = 0; i < mp.p; ++i) {
      const double u = x.data[i + 1] - b.b[i];
      d2 += u * u;
    }
    return -std::log(std::exp(-t) + std::sinh(t) * 0.5 * d2);
  }
  const HyperbolicPoint ball = to_ball(x);
  const double q = norm2(ball.data);
  double d2 = 0.0;
  for (int i = 0; i < mp.p; ++i) {
    const double u = ball.data[i] - b.b[i];
    d2 += u * u;
  }
  return std::log1p(-q) - std::log(d2);
}

double volume_weight(double t, const ModelParams& mp) {
  if (t < 0.0) throw DomainError("volume_weight: t >= 0");
  return std::pow(std::sinh(t), mp.n());
}

HyperbolicPoint horocyclic_compose(double t, std::span<const double> xvec,
                                   const ModelParams& mp) {
  if (xvec.size() + 1 != static_cast<std::size_t>(mp.p))
    throw DomainError("horocyclic_compose: xvec must have p-1 entries");
  const double et = std::exp(t);
  std::vector<double> scaled(xvec.size());
  for (std::size_t i = 0; i < xvec.size(); ++i) scaled[i] = et * xvec[i];
  return convert(halfspace_point(et, scaled), Model::Polar);
}

Rotation Rotation::identity(int p) {
  Rotation r{p, std::vector<double>(static_cast<std::size_t>(p) * p, 0.0)};
  for (int i = 0; i < p; ++i) r.m[i * p + i] = 1.0;
  return r;
}

Rotation Rotation::random(std::mt19937_64& rng, int p) {
  // Gram-Schmidt on a Gaussian matrix; determinant sign fixed to +1.
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> rows(p, std::vector<double>(p));
  for (auto& row : rows)
    for (auto& v : row) v = gauss(rng);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < i; ++j) {
      double dot = 0.0;
      for (int k = 0; k < p; ++k) dot += rows[i][k] * rows[j][k];
      for (int k = 0; k < p; ++k) rows[i][k] -= dot * rows[j][k];
    }
    double nn = std::sqrt(norm2(rows[i]));
    if (nn < 1e-8) return random(rng, p);  // degenerate draw, retry
    for (int k = 0; k < p; ++k) rows[i][k] /= nn;
  }
  Rotation r{p, {}};
  r.m.resize(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) r.m[i * p + j] = rows[i][j];
  // make it a proper rotation: flip last row if det < 0
  // (determinant via trivial expansion is overkill; use sign of Gram-Schmidt
  // parity through LU-free heuristic: compute det by Laplace for small p)
  std::vector<std::vector<double>> a = rows;
  double det = 1.0;
  for (int i = 0; i < p; ++i) {
    int piv = i;
    for (int k = i + 1; k < p; ++k)
      if (std::abs(a[k][i]) > std::abs(a[piv][i])) piv = k;
    if (piv != i) {
      std::swap(a[piv], a[i]);
      det = -det;
    }
    det *= a[i][i];
    for (int k = i + 1; k < p; ++k) {
      const double f = a[k][i] / a[i][i];
      for (int j = i; j < p; ++j) a[k][j] -= f * a[i][j];
    }
  }
  if (det < 0.0)
    for (int j = 0; j < p; ++j) r.m[(p - 1) * p + j] = -r.m[(p - 1) * p + j];
  return r;
}

std::vector<double> Rotation::apply(std::span<const double> v) const {
  std::vector<double> out(p, 0.0);
  for (int i = 0; i < p; ++i) {
    double s = 0.0;
    for (int j = 0; j < p; ++j) s += m[i * p + j] * v[j];
    out[i] = s;
  }
  return out;
}

HyperbolicPoint rotate(const Rotation& r, const HyperbolicPoint& x) {
  const HyperbolicPoint ball = to_ball(x);
  HyperbolicPoint out{Model::Ball, ball.p, r.apply(ball.data)};
  return convert(out, x.model);
}

BoundaryPoint rotate(const Rotation& r, const BoundaryPoint& b) {
  return BoundaryPoint(r.apply(b.b));
}

}  // namespace hh::geom

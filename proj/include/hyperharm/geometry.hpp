#pragma once
// Models of the real hyperbolic space H^p (polar, ball, upper half-space),
// the horocycle bracket A(x,b), distances and the invariant measure weight.
//
// Ball model conventions: base point is the origin, the distinguished
// boundary point ("north", the A_+ limit) is the last coordinate axis.
// The bracket is realized as A(x,b) = log((1-|x|^2)/|x-b|^2).

#include <random>
#include <span>
#include <vector>

#include "hyperharm/numerics.hpp"

namespace hh::geom {

struct ModelParams {
  int p;  // dimension of H^p, >= 2

  explicit ModelParams(int dim) : p(dim) {
    if (dim < 2) throw DomainError("ModelParams: p must be >= 2");
  }
  int n() const { return p - 1; }
  double rho() const { return 0.5 * static_cast<double>(p - 1); }
  // surface measure of S^{p-1}
  double boundary_area() const;
};

enum class Model { Polar, Ball, Halfspace };

// One point of H^p in one of three coordinate systems:
//   Polar:     data = [t, omega_1..omega_p],  t >= 0, |omega| = 1
//   Ball:      data = [x_1..x_p],             |x| < 1
//   Halfspace: data = [y, xvec_1..xvec_{p-1}], y > 0
struct HyperbolicPoint {
  Model model;
  int p;
  std::vector<double> data;
};

struct BoundaryPoint {
  std::vector<double> b;  // unit vector in R^p

  explicit BoundaryPoint(std::vector<double> v);
  int p() const { return static_cast<int>(b.size()); }
  static BoundaryPoint north(int p);
};

HyperbolicPoint origin(const ModelParams& mp);
HyperbolicPoint polar_point(double t, std::span<const double> omega);
HyperbolicPoint ball_point(std::span<const double> x);
HyperbolicPoint halfspace_point(double y, std::span<const double> xvec);

HyperbolicPoint convert(const HyperbolicPoint& x, Model target);

// Cartan radial coordinate |g|.
double polar_distance(const HyperbolicPoint& x);

// A(x,b): horocycle bracket; A(a_t.o, omega) = t along the ray towards omega.
double horocycle_bracket(const HyperbolicPoint& x, const BoundaryPoint& b,
                         const ModelParams& mp);

// sinh^n(t), the polar measure density (boundary measure normalized to 1).
double volume_weight(double t, const ModelParams& mp);

// The point a_t n . o in canonical polar form; satisfies
// cosh d = cosh t + e^t |xvec|^2 / 2.
HyperbolicPoint horocyclic_compose(double t, std::span<const double> xvec,
                                   const ModelParams& mp);

// Rotations of R^p acting on all three models (fixing the base point).
struct Rotation {
  int p;
  std::vector<double> m;  // row-major p x p orthogonal
  static Rotation identity(int p);
  static Rotation random(std::mt19937_64& rng, int p);
  std::vector<double> apply(std::span<const double> v) const;
};

HyperbolicPoint rotate(const Rotation& r, const HyperbolicPoint& x);
BoundaryPoint rotate(const Rotation& r, const BoundaryPoint& b);

}  // namespace hh::geom

#pragma once

#include <complex>
#include <optional>

#include "teich/slope.hpp"
#include "teich/twist.hpp"

namespace teich {

struct Vec2 {
  double x = 0;
  double y = 0;

  double norm() const;
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

double cross(const Vec2& a, const Vec2& b);
double dot(const Vec2& a, const Vec2& b);

// Real 2x2 matrix, column-major conventions: col0 is the holonomy of slope
// 0/1, col1 the holonomy of 1/0.
struct Mat2d {
  double a = 1, b = 0;  // row 0
  double c = 0, d = 1;  // row 1

  double det() const { return a * d - b * c; }
  Vec2 col0() const { return {a, c}; }
  Vec2 col1() const { return {b, d}; }
  Vec2 mul(double q, double p) const { return {a * q + b * p, c * q + d * p}; }
};

// A marked flat torus: unit-determinant basis matrix plus a positive scale.
// The holonomy of slope p/q is scale * basis * (q, p).
struct FlatTorus {
  Mat2d basis;
  double scale = 1;

  // Normalizes an arbitrary nondegenerate basis to |det| == 1, folding the
  // area into the scale.
  static FlatTorus make(const Mat2d& basis, double scale = 1);
  static FlatTorus square() { return FlatTorus{}; }

  // Torus whose vertical foliation has the given slope value and whose
  // horizontal foliation has the other; the two must be distinct.
  static FlatTorus from_directions(const Direction& vertical, const Direction& horizontal);

  double area() const { return scale * scale; }
  Vec2 holonomy(const Slope& s) const { return basis.mul(static_cast<double>(s.q), static_cast<double>(s.p)) * scale; }

  FlatTorus flowed(double t) const;

  // The marked modulus in the upper half-plane (orientation-corrected).
  std::complex<double> modulus() const;

  // Slope value of the flat direction dir expressed in marking coordinates.
  double direction_value(const Vec2& dir) const;
};

struct FlatLength {
  double length = 0;  // Euclidean norm of the holonomy
  double h = 0;       // |x| component (horizontal length)
  double v = 0;       // |y| component (vertical length)
};

FlatLength flat_length(const FlatTorus& q, const Slope& alpha);

struct BalanceData {
  double L = 0;      // minimum flat length along the flow
  double t_bal = 0;  // time at which it is attained
};

// Rejects slopes that are purely horizontal or vertical (balance time would
// be infinite).
BalanceData balance_data(const FlatTorus& q, const Slope& alpha);

struct SystoleResult {
  Slope slope;
  double length = 0;
};

// Shortest essential curve; ties broken by canonical slope order (rational
// value, infinity last).
SystoleResult systole(const FlatTorus& q);

// Shortest essential curve whose straight representatives survive a slit of
// holonomy w: a slope is admissible when some parallel closed geodesic in
// its direction misses the open slit, i.e. |cross(holonomy, w)| < area.
SystoleResult systole_with_slit(const FlatTorus& q, const Vec2& w);

// The real twist coordinate around alpha of the flat perpendicular to alpha
// (the quadratic-differential transversal convention).
double perpendicular_twist(const FlatTorus& q, const Slope& alpha);

// Exact Teichmueller distance between marked flat tori: half the hyperbolic
// distance between their moduli.
double exact_torus_distance(const FlatTorus& a, const FlatTorus& b);

}  // namespace teich

#pragma once

#include <complex>

namespace teich {

// A point of the upper half-plane in the distance formula's convention:
// x is a twist coordinate, y a reciprocal-length coordinate.
struct UHPoint {
  double x = 0;
  double y = 1;
};

// arccosh(1 + (|p-q|^2) / (2 y_p y_q)); the hyperbolic metric.
double hyperbolic_distance(const UHPoint& p, const UHPoint& q);
double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2);

// The point at hyperbolic arclength s from z1 along the geodesic toward z2.
// s may exceed the distance (the geodesic is extended) or be negative.
std::complex<double> geodesic_point(std::complex<double> z1, std::complex<double> z2, double s);

}  // namespace teich

#include "teich/hyperbolic.hpp"

#include <cmath>

#include "teich/errors.hpp"

namespace teich {

double hyperbolic_distance(const UHPoint& p, const UHPoint& q) {
  if (!(p.y > 0) || !(q.y > 0)) throw ValidationError("upper half-plane points need y > 0");
  double dx = p.x - q.x;
  double dy = p.y - q.y;
  double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
  return std::acosh(arg);
}

double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2) {
  return hyperbolic_distance(UHPoint{z1.real(), z1.imag()}, UHPoint{z2.real(), z2.imag()});
}

std::complex<double> geodesic_point(std::complex<double> z1, std::complex<double> z2, double s) {
  if (!(z1.imag() > 0) || !(z2.imag() > 0))
    throw ValidationError("upper half-plane points need positive imaginary part");
  double dx = z2.real() - z1.real();
  // Near-vertical geodesics degenerate to the exponential parametrization.
  if (std::abs(dx) < 1e-13 * (1.0 + std::abs(z1.real()))) {
    double sign = (z2.imag() >= z1.imag()) ? 1.0 : -1.0;
    return {z1.real(), z1.imag() * std::exp(sign * s)};
  }
  // The geodesic is a half-circle centered on the real axis.
  double c = (std::norm(z2) - std::norm(z1)) / (2.0 * dx);
  double r = std::abs(z1 - std::complex<double>{c, 0});
  double phi1 = std::atan2(z1.imag(), z1.real() - c);
  double phi2 = std::atan2(z2.imag(), z2.real() - c);
  // Arclength along the circle: t(phi) = log tan(phi/2), decreasing in phi.
  double t1 = std::log(std::tan(phi1 / 2.0));
  double t2 = std::log(std::tan(phi2 / 2.0));
  double dir = (t2 >= t1) ? 1.0 : -1.0;
  double t = t1 + dir * s;
  double phi = 2.0 * std::atan(std::exp(t));
  return {c + r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace teich

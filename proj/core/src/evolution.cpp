#include "teich/evolution.hpp"

#include <cmath>

#include "teich/errors.hpp"

namespace teich {

CurveId CurveId::parse(const std::string& text) {
  if (text == "gamma") return gamma();
  return of(Slope::parse(text));
}

double coarse_length(const CurveEvolution& ev, double t) {
  return ev.L * std::cosh(t - ev.t_bal);
}

double cylinder_modulus_profile(const CurveEvolution& ev, double t) {
  if (ev.T < 0) throw ValidationError("total twist must be nonnegative");
  double c = std::cosh(t - ev.t_bal);
  return ev.T / (c * c);
}

double cylinder_size_profile(const CurveEvolution& ev, double t) {
  if (ev.T < 0) throw ValidationError("total twist must be nonnegative");
  return ev.T * ev.L / std::cosh(t - ev.t_bal);
}

double twist_profile(const CurveEvolution& ev, double t) {
  if (ev.T < 0) throw ValidationError("total twist must be nonnegative");
  double u = 1.0 + std::exp(-2.0 * (t - ev.t_bal));
  return ev.T / (u * u);
}

}  // namespace teich

#pragma once

#include <string>

#include "teich/slope.hpp"

namespace teich {

// Identifier for a tracked curve: a torus slope, or the separating curve of
// a slit surface (named "gamma" in serialized output).
struct CurveId {
  bool separating = false;
  Slope slope{};

  static CurveId of(const Slope& s) { return CurveId{false, s}; }
  static CurveId gamma() { return CurveId{true, Slope{}}; }

  bool operator==(const CurveId& o) const {
    return separating == o.separating && (separating || slope == o.slope);
  }
  std::string str() const { return separating ? "gamma" : slope.str(); }
  static CurveId parse(const std::string& text);
};

// Per-curve data governing flat length, twist and cylinder modulus along a
// geodesic: minimum flat length L attained at the balance time, and the
// total twist T accumulated between the two foliations.
struct CurveEvolution {
  CurveId curve;
  double L = 1;      // minimum flat length, positive
  double t_bal = 0;  // balance time
  double T = 0;      // total twist, nonnegative
};

// L * cosh(t - t_bal): the coarse length model.
double coarse_length(const CurveEvolution& ev, double t);

// T / cosh^2(t - t_bal): unimodal, peak T at the balance time.
double cylinder_modulus_profile(const CurveEvolution& ev, double t);

// T * L / cosh(t - t_bal): modulus times coarse length.
double cylinder_size_profile(const CurveEvolution& ev, double t);

// T / (1 + exp(-2 (t - t_bal)))^2: nondecreasing, limits 0 and T.
double twist_profile(const CurveEvolution& ev, double t);

}  // namespace teich

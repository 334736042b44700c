#pragma once

#include <cstdint>

#include "teich/farey.hpp"
#include "teich/slope.hpp"

namespace teich {

// A direction on the torus: either an exact rational slope or a real slope
// value.  Rational directions keep twist arithmetic exact however deep the
// continued fraction goes.
struct Direction {
  bool rational = true;
  Slope slope{};     // valid when rational
  double real = 0;   // valid otherwise

  static Direction of(const Slope& s) { return Direction{true, s, 0}; }
  static Direction of_real(double v) { return Direction{false, Slope{}, v}; }

  double value() const { return rational ? slope.value() : real; }
  bool is_vertical_infinity() const;
};

// The real twist coordinate of a direction around alpha: normalize alpha to
// infinity and read off the transformed slope value.  Directions parallel to
// alpha are rejected (twisting is undefined without essential intersection).
double twist_coordinate(const Slope& alpha, const Direction& dir);

// Signed twisting of beta around alpha measured against an origin curve.
// Changing the origin by one Dehn twist around alpha shifts every output by
// one; the value is well defined up to that convention (+-1).
std::int64_t twist_of(const Slope& alpha, const Slope& beta, const Slope& origin);

// Relative twisting |twist(beta1) - twist(beta2)| around alpha; the annular
// curve-complex distance up to an additive error of two, independent of the
// origin.
std::int64_t annular_projection_distance(const Slope& alpha, const Direction& beta1,
                                         const Direction& beta2);
std::int64_t annular_projection_distance(const Slope& alpha, const Slope& beta1,
                                         const Slope& beta2);

}  // namespace teich

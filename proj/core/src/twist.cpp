#include "teich/twist.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "teich/errors.hpp"

namespace teich {

namespace {

std::int64_t floor_div128(__int128 p, __int128 q) {
  __int128 d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  if (d > std::numeric_limits<std::int64_t>::max() || d < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("twist coordinate overflow");
  return static_cast<std::int64_t>(d);
}

// Exact image of a rational direction under an integer Moebius map, as a
// (numerator, denominator) pair with nonnegative denominator.
struct Rat128 {
  __int128 p;
  __int128 q;
};

Rat128 transform_exact(const Mat2i& m, const Slope& s) {
  __int128 np = static_cast<__int128>(m.a) * s.p + static_cast<__int128>(m.b) * s.q;
  __int128 nq = static_cast<__int128>(m.c) * s.p + static_cast<__int128>(m.d) * s.q;
  if (nq < 0) {
    np = -np;
    nq = -nq;
  }
  return {np, nq};
}

std::int64_t twist_floor(const Mat2i& m, const Direction& dir) {
  if (dir.rational) {
    Rat128 r = transform_exact(m, dir.slope);
    if (r.q == 0) throw ValidationError("twisting undefined: curve is parallel to the annulus core");
    return floor_div128(r.p, r.q);
  }
  double x = apply(m, dir.real);
  if (!std::isfinite(x)) throw ValidationError("twisting undefined: direction is parallel to the annulus core");
  return static_cast<std::int64_t>(std::floor(x));
}

}  // namespace

bool Direction::is_vertical_infinity() const {
  return rational ? slope.is_infinity() : std::isinf(real);
}

double twist_coordinate(const Slope& alpha, const Direction& dir) {
  Mat2i m = normalize_to_infinity(alpha);
  if (dir.rational) {
    Rat128 r = transform_exact(m, dir.slope);
    if (r.q == 0) throw ValidationError("twisting undefined: curve is parallel to the annulus core");
    return static_cast<double>(r.p) / static_cast<double>(r.q);
  }
  double x = apply(m, dir.real);
  if (!std::isfinite(x)) throw ValidationError("twisting undefined: direction is parallel to the annulus core");
  return x;
}

std::int64_t twist_of(const Slope& alpha, const Slope& beta, const Slope& origin) {
  if (intersection(alpha, beta) == 0)
    throw ValidationError("twist_of: beta does not intersect alpha");
  if (intersection(alpha, origin) == 0)
    throw ValidationError("twist_of: origin does not intersect alpha");
  Mat2i m = normalize_to_infinity(alpha);
  return twist_floor(m, Direction::of(beta)) - twist_floor(m, Direction::of(origin));
}

std::int64_t annular_projection_distance(const Slope& alpha, const Direction& beta1,
                                         const Direction& beta2) {
  Mat2i m = normalize_to_infinity(alpha);
  std::int64_t t1 = twist_floor(m, beta1);
  std::int64_t t2 = twist_floor(m, beta2);
  return std::llabs(t1 - t2);
}

std::int64_t annular_projection_distance(const Slope& alpha, const Slope& beta1,
                                         const Slope& beta2) {
  return annular_projection_distance(alpha, Direction::of(beta1), Direction::of(beta2));
}

}  // namespace teich

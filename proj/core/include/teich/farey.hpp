#pragma once

#include <cstdint>
#include <vector>

#include "teich/slope.hpp"

namespace teich {

// Integer 2x2 matrix acting on slopes by p/q -> (a*p + b*q)/(c*p + d*q).
struct Mat2i {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2i identity() { return {}; }
  std::int64_t det() const { return a * d - b * c; }
  Mat2i inverse() const;  // requires |det| == 1
};

Slope apply(const Mat2i& m, const Slope& s);
// Moebius action on a real slope value (infinity allowed).
double apply(const Mat2i& m, double value);

// A change of marking M with M*alpha == infinity, integer entries, |det| == 1.
// Deterministic: identity when alpha is already infinity, otherwise the
// minimal extended-Euclid solution.
Mat2i normalize_to_infinity(const Slope& alpha);

struct FareyOptions {
  // Bound on the candidate-vertex frontier; exceeding it signals
  // pathological input (a continued fraction with astronomically many
  // semiconvergents), not a math failure.
  std::size_t max_vertices = 200000;
};

// Graph distance in the Farey graph (vertices: canonical slopes, edges:
// intersection number one).
std::int64_t farey_distance(const Slope& a, const Slope& b, const FareyOptions& opts = {});

// A shortest path from a to b.  Among equal-length paths the one
// lexicographically smallest in (denominator, numerator) at the first
// divergence is returned.
std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b, const FareyOptions& opts = {});

// Candidate vertex set used by the distance/geodesic search after b has been
// normalized to infinity: the semiconvergent fans of a, the two integers
// bracketing a, and infinity itself.  Exposed for tests.
std::vector<Slope> farey_pivot_set(const Slope& a, const FareyOptions& opts = {});

}  // namespace teich

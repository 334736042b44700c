#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace teich {

// A simple closed curve on the torus, encoded as a reduced fraction p/q.
// The curve p/q has homology class (q, p): q steps along the 0/1 basis curve,
// p steps along 1/0.  Infinity is canonically 1/0; denominators are
// nonnegative and gcd(|p|, q) == 1.
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  static Slope make(std::int64_t p, std::int64_t q);
  static Slope infinity() { return Slope{1, 0}; }

  bool is_infinity() const { return q == 0; }
  double value() const;  // p/q as a real; +inf for 1/0

  bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
  bool operator!=(const Slope& o) const { return !(*this == o); }

  std::string str() const;                       // "p/q"
  static Slope parse(const std::string& text);   // inverse of str()
};

// Geometric intersection number |p1*q2 - q1*p2|.  Computed in 128-bit and
// saturated to INT64_MAX so adjacency tests stay exact for deep slopes.
std::int64_t intersection(const Slope& a, const Slope& b);

// Total order by rational value with infinity greatest.  Used for
// deterministic tie-breaking when two curves have equal flat length.
bool value_less(const Slope& a, const Slope& b);

// Lexicographic order on (denominator, numerator); the Farey geodesic
// tie-break.
bool lex_qp_less(const Slope& a, const Slope& b);

struct SlopeHash {
  std::size_t operator()(const Slope& s) const {
    std::size_t h1 = std::hash<std::int64_t>{}(s.p);
    std::size_t h2 = std::hash<std::int64_t>{}(s.q);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

}  // namespace teich

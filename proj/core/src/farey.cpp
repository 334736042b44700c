#include "teich/farey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>

#include "teich/errors.hpp"

namespace teich {

namespace {

std::int64_t checked64(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceError(std::string("integer overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

// value(p1/q1) < value(p2/q2) for finite positive-denominator pairs.
bool frac_less(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  return static_cast<__int128>(p1) * q2 < static_cast<__int128>(p2) * q1;
}

}  // namespace

Mat2i Mat2i::inverse() const {
  std::int64_t dt = det();
  if (dt == 1) return Mat2i{d, -b, -c, a};
  if (dt == -1) return Mat2i{-d, b, c, -a};
  throw ValidationError("matrix is not in GL(2,Z)");
}

Slope apply(const Mat2i& m, const Slope& s) {
  __int128 np = static_cast<__int128>(m.a) * s.p + static_cast<__int128>(m.b) * s.q;
  __int128 nq = static_cast<__int128>(m.c) * s.p + static_cast<__int128>(m.d) * s.q;
  if (nq < 0) {
    np = -np;
    nq = -nq;
  }
  if (nq == 0) return Slope::infinity();
  // Unimodular matrices preserve primitivity, so no reduction is needed.
  return Slope{checked64(np, "apply"), checked64(nq, "apply")};
}

double apply(const Mat2i& m, double value) {
  if (std::isinf(value)) {
    if (m.c == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(m.a) / static_cast<double>(m.c);
  }
  double num = static_cast<double>(m.a) * value + static_cast<double>(m.b);
  double den = static_cast<double>(m.c) * value + static_cast<double>(m.d);
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}

Mat2i normalize_to_infinity(const Slope& alpha) {
  if (alpha.is_infinity()) return Mat2i::identity();
  std::int64_t p = alpha.p, q = alpha.q;
  // Solve a*p + b*q = 1 by the extended Euclidean algorithm.
  std::int64_t old_r = p, r = q;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp;
    tmp = old_r - quot * r; old_r = r; r = tmp;
    tmp = old_s - quot * s; old_s = s; s = tmp;
    tmp = old_t - quot * t; old_t = t; t = tmp;
  }
  std::int64_t a = old_s, b = old_t;
  if (old_r < 0) { a = -a; b = -b; }  // a*p + b*q = gcd = 1
  if (q > 1) {
    // Reduce a modulo q for determinism, preferring the smallest |a|.
    std::int64_t a0 = ((a % q) + q) % q;
    std::int64_t b0 = (1 - a0 * p) / q;
    std::int64_t a1 = a0 - q;
    std::int64_t b1 = (1 - a1 * p) / q;
    if (std::abs(a1) < std::abs(a0)) { a = a1; b = b1; }
    else { a = a0; b = b0; }
  } else {
    a = 0;
    b = 1;
  }
  Mat2i m{a, b, q, -p};
  return m;
}

std::vector<Slope> farey_pivot_set(const Slope& a, const FareyOptions& opts) {
  std::vector<Slope> out;
  out.push_back(Slope::infinity());
  if (a.is_infinity()) return out;
  out.push_back(a);
  if (a.q == 1) return out;

  std::int64_t fl = floor_div(a.p, a.q);
  std::int64_t lp = fl, lq = 1;
  std::int64_t hp = fl + 1, hq = 1;
  out.push_back(Slope{lp, lq});
  out.push_back(Slope{hp, hq});
  while (true) {
    if (out.size() > opts.max_vertices)
      throw ResourceError("farey search frontier exceeds configured bound");
    std::int64_t mp = checked64(static_cast<__int128>(lp) + hp, "pivot walk");
    std::int64_t mq = checked64(static_cast<__int128>(lq) + hq, "pivot walk");
    if (mp == a.p && mq == a.q) break;
    out.push_back(Slope{mp, mq});
    if (frac_less(mp, mq, a.p, a.q)) {
      lp = mp; lq = mq;
    } else {
      hp = mp; hq = mq;
    }
  }
  return out;
}

namespace {

// Breadth-first distances from `source` over the candidate set.
std::vector<std::int64_t> bfs_over(const std::vector<Slope>& verts, std::size_t source) {
  std::vector<std::int64_t> dist(verts.size(), -1);
  std::deque<std::size_t> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (dist[j] >= 0) continue;
      if (intersection(verts[cur], verts[j]) == 1) {
        dist[j] = dist[cur] + 1;
        queue.push_back(j);
      }
    }
  }
  return dist;
}

}  // namespace

std::int64_t farey_distance(const Slope& a, const Slope& b, const FareyOptions& opts) {
  if (a == b) return 0;
  if (intersection(a, b) == 1) return 1;
  Mat2i m = normalize_to_infinity(b);
  Slope an = apply(m, a);
  std::vector<Slope> verts = farey_pivot_set(an, opts);
  std::size_t src = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == an) src = i;
  std::vector<std::int64_t> dist = bfs_over(verts, src);
  // verts[0] is infinity, the image of b.
  if (dist[0] < 0) throw ResourceError("farey search failed to reach target");
  return dist[0];
}

std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b, const FareyOptions& opts) {
  if (a == b) return {a};
  if (intersection(a, b) == 1) return {a, b};
  Mat2i m = normalize_to_infinity(b);
  Mat2i minv = m.inverse();
  Slope an = apply(m, a);
  std::vector<Slope> verts = farey_pivot_set(an, opts);
  std::size_t src = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == an) src = i;
  // Distances measured from the target (infinity, index 0), so the walk from
  // a can descend greedily.
  std::vector<std::int64_t> dist = bfs_over(verts, 0);
  if (dist[src] < 0) throw ResourceError("farey search failed to reach target");

  std::vector<Slope> path;
  path.push_back(a);
  std::size_t cur = src;
  while (dist[cur] != 0) {
    bool found = false;
    std::size_t best = 0;
    Slope best_orig{};
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (dist[j] != dist[cur] - 1) continue;
      if (intersection(verts[cur], verts[j]) != 1) continue;
      Slope orig = apply(minv, verts[j]);
      if (!found || lex_qp_less(orig, best_orig)) {
        found = true;
        best = j;
        best_orig = orig;
      }
    }
    if (!found) throw ResourceError("farey geodesic reconstruction failed");
    path.push_back(best_orig);
    cur = best;
  }
  return path;
}

}  // namespace teich

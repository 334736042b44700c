#include "teich/flat_torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "teich/errors.hpp"
#include "teich/hyperbolic.hpp"

namespace teich {

double Vec2::norm() const { return std::hypot(x, y); }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

FlatTorus FlatTorus::make(const Mat2d& basis, double scale) {
  double dt = std::abs(basis.det());
  if (!(dt > 0) || !std::isfinite(dt)) throw ValidationError("degenerate torus basis");
  if (!(scale > 0)) throw ValidationError("torus scale must be positive");
  double a = std::sqrt(dt);
  Mat2d b{basis.a / a, basis.b / a, basis.c / a, basis.d / a};
  return FlatTorus{b, scale * a};
}

FlatTorus FlatTorus::from_directions(const Direction& vertical, const Direction& horizontal) {
  bool vinf = vertical.is_vertical_infinity();
  bool hinf = horizontal.is_vertical_infinity();
  if (vinf && hinf) throw ValidationError("foliation directions must be distinct");
  if (vinf) {
    double eta = horizontal.value();
    return make(Mat2d{1, 0, -eta, 1});
  }
  if (hinf) {
    double omega = vertical.value();
    return make(Mat2d{-omega, 1, 1, 0});
  }
  double omega = vertical.value();
  double eta = horizontal.value();
  if (omega == eta) throw ValidationError("foliation directions must be distinct");
  return make(Mat2d{omega, -1, -eta, 1});
}

FlatTorus FlatTorus::flowed(double t) const {
  double et = std::exp(t);
  Mat2d b{basis.a * et, basis.b * et, basis.c / et, basis.d / et};
  return FlatTorus{b, scale};
}

std::complex<double> FlatTorus::modulus() const {
  std::complex<double> u{basis.a, basis.c};
  std::complex<double> w{basis.b, basis.d};
  std::complex<double> tau = w / u;
  if (tau.imag() < 0) tau = std::conj(tau);
  return tau;
}

double FlatTorus::direction_value(const Vec2& dir) const {
  double dt = basis.det();
  double cq = (basis.d * dir.x - basis.b * dir.y) / dt;
  double cp = (-basis.c * dir.x + basis.a * dir.y) / dt;
  if (cq == 0) return std::numeric_limits<double>::infinity();
  return cp / cq;
}

FlatLength flat_length(const FlatTorus& q, const Slope& alpha) {
  Vec2 h = q.holonomy(alpha);
  return FlatLength{h.norm(), std::abs(h.x), std::abs(h.y)};
}

BalanceData balance_data(const FlatTorus& q, const Slope& alpha) {
  FlatLength fl = flat_length(q, alpha);
  if (fl.h == 0 || fl.v == 0)
    throw ValidationError("balance_data: curve is horizontal or vertical, balance time is infinite");
  return BalanceData{std::sqrt(2.0 * fl.h * fl.v), 0.5 * std::log(fl.v / fl.h)};
}

namespace {

struct LatVec {
  std::int64_t q = 0, p = 0;
  Vec2 hol;
};

LatVec lat_vec(const FlatTorus& t, std::int64_t q, std::int64_t p) {
  Vec2 h = t.basis.mul(static_cast<double>(q), static_cast<double>(p)) * t.scale;
  return LatVec{q, p, h};
}

// Lagrange-reduced basis with integer marking coordinates carried along.
std::pair<LatVec, LatVec> reduced_basis(const FlatTorus& t) {
  LatVec e1 = lat_vec(t, 1, 0);
  LatVec e2 = lat_vec(t, 0, 1);
  for (int iter = 0; iter < 256; ++iter) {
    if (dot(e1.hol, e1.hol) > dot(e2.hol, e2.hol)) std::swap(e1, e2);
    double mu = dot(e2.hol, e1.hol) / dot(e1.hol, e1.hol);
    std::int64_t k = std::llround(mu);
    if (k == 0) break;
    e2 = lat_vec(t, e2.q - k * e1.q, e2.p - k * e1.p);
  }
  if (dot(e1.hol, e1.hol) > dot(e2.hol, e2.hol)) std::swap(e1, e2);
  return {e1, e2};
}

bool better(const SystoleResult& cand, const SystoleResult& best) {
  if (cand.length < best.length * (1.0 - 1e-12)) return true;
  if (cand.length > best.length * (1.0 + 1e-12)) return false;
  return value_less(cand.slope, best.slope);
}

void consider(std::vector<SystoleResult>& pool, const LatVec& v) {
  pool.push_back(SystoleResult{Slope::make(v.p, v.q), v.hol.norm()});
}

SystoleResult pick_best(const std::vector<SystoleResult>& pool) {
  SystoleResult best = pool.front();
  for (const auto& c : pool)
    if (better(c, best)) best = c;
  return best;
}

std::vector<SystoleResult> short_candidates(const FlatTorus& t) {
  auto [e1, e2] = reduced_basis(t);
  std::vector<SystoleResult> pool;
  for (std::int64_t a = -2; a <= 2; ++a) {
    for (std::int64_t b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
      consider(pool, lat_vec(t, a * e1.q + b * e2.q, a * e1.p + b * e2.p));
    }
  }
  return pool;
}

}  // namespace

SystoleResult systole(const FlatTorus& q) { return pick_best(short_candidates(q)); }

SystoleResult systole_with_slit(const FlatTorus& q, const Vec2& w) {
  double area = q.area();
  std::vector<SystoleResult> pool;
  auto admissible = [&](const Vec2& hol) { return std::abs(cross(hol, w)) < area; };

  auto [e1, e2] = reduced_basis(q);
  for (std::int64_t a = -2; a <= 2; ++a) {
    for (std::int64_t b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
      LatVec v = lat_vec(q, a * e1.q + b * e2.q, a * e1.p + b * e2.p);
      if (admissible(v.hol)) consider(pool, v);
    }
  }

  // Walk the semiconvergents of the slit direction; deep approximants are
  // the curves that stay admissible when the slit wraps the piece.
  double dt = q.basis.det();
  double s = q.scale;
  double wq = (q.basis.d * w.x - q.basis.b * w.y) / (dt * s);
  double wp = (-q.basis.c * w.x + q.basis.a * w.y) / (dt * s);
  if (std::abs(wq) < 1e-300 * std::abs(wp)) {
    LatVec v = lat_vec(q, 0, 1);
    if (admissible(v.hol)) consider(pool, v);
  } else {
    double r = wp / wq;
    double fl = std::floor(r);
    if (std::abs(fl) < 4.0e15) {
      LatVec lo = lat_vec(q, 1, static_cast<std::int64_t>(fl));
      LatVec hi = lat_vec(q, 1, static_cast<std::int64_t>(fl) + 1);
      double best_len = std::numeric_limits<double>::infinity();
      if (admissible(lo.hol)) { consider(pool, lo); best_len = std::min(best_len, lo.hol.norm()); }
      if (admissible(hi.hol)) { consider(pool, hi); best_len = std::min(best_len, hi.hol.norm()); }
      for (int step = 0; step < 500; ++step) {
        __int128 mq = static_cast<__int128>(lo.q) + hi.q;
        __int128 mp = static_cast<__int128>(lo.p) + hi.p;
        if (mq > std::numeric_limits<std::int64_t>::max() ||
            mp > std::numeric_limits<std::int64_t>::max() ||
            mp < std::numeric_limits<std::int64_t>::min())
          break;
        LatVec med = lat_vec(q, static_cast<std::int64_t>(mq), static_cast<std::int64_t>(mp));
        if (admissible(med.hol)) {
          consider(pool, med);
          best_len = std::min(best_len, med.hol.norm());
        }
        double mval = med.q == 0 ? std::numeric_limits<double>::infinity()
                                 : static_cast<double>(med.p) / static_cast<double>(med.q);
        if (mval == r) break;
        if (mval < r) lo = med; else hi = med;
        double shortest_side = std::min(lo.hol.norm(), hi.hol.norm());
        if (std::isfinite(best_len) && shortest_side > 8.0 * best_len) break;
      }
    }
  }

  if (pool.empty()) return systole(q);  // degenerate slit data; fall back
  return pick_best(pool);
}

double perpendicular_twist(const FlatTorus& q, const Slope& alpha) {
  Vec2 h = q.holonomy(alpha);
  Vec2 perp{-h.y, h.x};
  double value = q.direction_value(perp);
  Mat2i m = normalize_to_infinity(alpha);
  double x = apply(m, value);
  if (!std::isfinite(x)) throw ValidationError("perpendicular twist undefined");
  return x;
}

double exact_torus_distance(const FlatTorus& a, const FlatTorus& b) {
  return 0.5 * hyperbolic_distance(a.modulus(), b.modulus());
}

}  // namespace teich

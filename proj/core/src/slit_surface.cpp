#include "teich/slit_surface.hpp"

#include <cmath>
#include <string>

#include "teich/errors.hpp"

namespace teich {

const char* piece_name(Piece p) {
  switch (p) {
    case Piece::Whole: return "whole";
    case Piece::Y: return "Y";
    case Piece::Z: return "Z";
  }
  return "?";
}

Piece parse_piece(const std::string& text) {
  if (text == "whole") return Piece::Whole;
  if (text == "Y") return Piece::Y;
  if (text == "Z") return Piece::Z;
  throw ValidationError("unknown piece: " + text);
}

SlitSurface SlitSurface::flowed(double t) const {
  double et = std::exp(t);
  return SlitSurface{big.flowed(t), small.flowed(t), Vec2{slit.x * et, slit.y / et}, rel_twist};
}

const FlatTorus& SlitSurface::piece(Piece p) const {
  if (p == Piece::Y) return small;
  if (p == Piece::Z) return big;
  throw ValidationError("slit surface has pieces Y and Z only");
}

double SlitSurface::balanced_slit_length() const {
  return std::sqrt(2.0 * std::abs(slit.x * slit.y));
}

double SlitSurface::slit_balance_time() const {
  if (slit.x == 0 || slit.y == 0)
    throw ValidationError("slit is axis-aligned; balance time is infinite");
  return 0.5 * std::log(std::abs(slit.y) / std::abs(slit.x));
}

SystoleResult SlitSurface::piece_systole(Piece p) const {
  return systole_with_slit(piece(p), slit);
}

double SlitSurface::piece_size(Piece p) const { return piece_systole(p).length; }

double SlitSurface::expanding_modulus(Piece p) const {
  return std::log(piece_size(p) / gamma_length());
}

void SlitSurface::validate() const {
  if (!(slit.norm() > 0)) throw ValidationError("slit surface needs a nonzero slit");
  if (slit.x == 0 || slit.y == 0)
    throw ValidationError("slit must not be axis-aligned (flow would never balance it)");
  double t0 = slit_balance_time();
  SlitSurface at_min = flowed(t0);
  double len = at_min.slit.norm();
  for (Piece p : {Piece::Y, Piece::Z}) {
    double sys = systole(at_min.piece(p)).length;
    if (!(len <= 0.5 * sys))
      throw ValidationError(std::string("slit does not embed in piece ") + piece_name(p) +
                            ": balanced slit length " + std::to_string(len) +
                            " exceeds half the piece systole " + std::to_string(sys));
  }
}

FlatTorus pseudo_anosov_axis_torus() {
  // Unstable/stable slope values of [[2,1],[1,1]] acting on (q, p).
  double s5 = std::sqrt(5.0);
  double omega = (s5 - 1.0) / 2.0;
  double eta = -(1.0 + s5) / 2.0;
  return FlatTorus::from_directions(Direction::of_real(omega), Direction::of_real(eta));
}

std::pair<SlitSurface, SlitSurface> build_counterexample_pair(const CounterexampleParams& prm) {
  if (!(prm.d >= 2)) throw ValidationError("counterexample needs d >= 2");
  if (!(prm.c > 0 && prm.c < 1)) throw ValidationError("counterexample needs c in (0,1)");
  double eps = prm.c * std::exp(-prm.d / 2.0);
  if (!(prm.delta > 0 && prm.delta < eps / 10.0))
    throw ValidationError("counterexample needs 0 < delta < c e^{-d/2}/10");

  FlatTorus t_big = pseudo_anosov_axis_torus();

  auto assemble = [&](double small_time) {
    FlatTorus small = t_big.flowed(small_time);
    small.scale *= prm.delta;
    // Slit cut at 45 degrees in the small piece's own balanced frame, then
    // carried to the shared surface frame.
    double e = std::exp(small_time);
    Vec2 w{prm.delta * eps / std::sqrt(2.0) * e, prm.delta * eps / std::sqrt(2.0) / e};
    SlitSurface s{t_big, small, w, 0};
    s.validate();
    return s;
  };

  return {assemble(-prm.d / 2.0), assemble(-3.0 * prm.d / 2.0)};
}

}  // namespace teich

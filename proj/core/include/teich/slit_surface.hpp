#pragma once

#include <cstdint>
#include <utility>

#include "teich/flat_torus.hpp"

namespace teich {

enum class Piece { Whole, Y, Z };

const char* piece_name(Piece p);
Piece parse_piece(const std::string& text);

// A genus-2 half-translation surface: two flat tori glued along a straight
// slit.  Z is the big piece, Y the small one; both carry the same slit
// holonomy vector.  rel_twist records the integer twisting of the gluing
// around the separating curve gamma.
struct SlitSurface {
  FlatTorus big;    // piece Z
  FlatTorus small;  // piece Y
  Vec2 slit;        // slit holonomy
  std::int64_t rel_twist = 0;

  SlitSurface flowed(double t) const;
  const FlatTorus& piece(Piece p) const;

  // gamma doubles the slit.
  double gamma_length() const { return 2.0 * slit.norm(); }

  // Slit length at the time the flow makes it shortest.
  double balanced_slit_length() const;
  // That time.
  double slit_balance_time() const;

  // Shortest essential curve of a piece measured in the slit metric
  // (straight representatives must miss the slit).
  SystoleResult piece_systole(Piece p) const;
  // Its length; the "size" of the piece.
  double piece_size(Piece p) const;

  // log(size of the piece / flat length of gamma): the modulus of the
  // expanding annulus around gamma on that side.  May be negative when gamma
  // is not short relative to the piece.
  double expanding_modulus(Piece p) const;

  // Throws ValidationError when the slit cannot embed with the required
  // margin (checked at the slit's balanced time, where the comparison is
  // flow-invariant).
  void validate() const;
};

// The unit-area torus whose vertical/horizontal foliations are the unstable
// and stable directions of the hyperbolic map [[2,1],[1,1]]; the base point
// of every built-in slit construction.
FlatTorus pseudo_anosov_axis_torus();

struct CounterexampleParams {
  double d = 4;      // separation parameter, >= 2
  double c = 0.1;    // slit scale, in (0,1)
  double delta = 0;  // small-piece scale; must satisfy delta < c e^{-d/2}/10
};

// Two slit surfaces sharing an identical big piece whose small pieces sit at
// flow times -d/2 and -3d/2; their relative twisting around gamma is zero.
std::pair<SlitSurface, SlitSurface> build_counterexample_pair(const CounterexampleParams& p);

}  // namespace teich

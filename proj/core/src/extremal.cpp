#include "teich/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teich {

double extremal_length_torus(const FlatTorus& q, const Slope& alpha) {
  double len = flat_length(q, alpha).length;
  return len * len / q.area();
}

double piece_extremal_length(const SlitSurface& s, Piece p, const Slope& alpha) {
  double len = flat_length(s.piece(p), alpha).length;
  double size = s.piece_size(p);
  return (len / size) * (len / size);
}

double extremal_length_gamma(const SlitSurface& s) {
  double sum = std::max(s.expanding_modulus(Piece::Y), 0.0) +
               std::max(s.expanding_modulus(Piece::Z), 0.0);
  if (sum <= 0) return std::numeric_limits<double>::infinity();
  return 1.0 / sum;
}

}  // namespace teich

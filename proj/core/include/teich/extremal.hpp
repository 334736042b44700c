#pragma once

#include "teich/flat_torus.hpp"
#include "teich/slit_surface.hpp"

namespace teich {

// Extremal length of a torus curve: squared flat length over area.  Exact on
// flat tori, not an estimate.
double extremal_length_torus(const FlatTorus& q, const Slope& alpha);

// Extremal length of a curve living in one piece of a slit surface:
// (flat length / piece size)^2, coarse.
double piece_extremal_length(const SlitSurface& s, Piece p, const Slope& alpha);

// Reciprocal of the sum of the expanding-annulus moduli on both sides of
// gamma (the flat cylinder around gamma is degenerate and contributes
// nothing).  Returns +infinity when neither side has positive modulus.
double extremal_length_gamma(const SlitSurface& s);

}  // namespace teich

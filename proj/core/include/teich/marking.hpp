#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "teich/evolution.hpp"
#include "teich/extremal.hpp"
#include "teich/flat_torus.hpp"
#include "teich/slit_surface.hpp"

namespace teich {

using Surface = std::variant<FlatTorus, SlitSurface>;

enum class Topology { Torus, SlitGenus2 };
Topology topology_of(const Surface& s);
const char* topology_name(Topology t);

struct ThickThinOptions {
  double eps0 = 0.1;   // curves at or below this extremal length are short
  double eps1 = 0.01;  // everything else must sit above this
};

struct ThickThin {
  std::vector<CurveId> short_set;
  std::vector<Piece> pieces;
  double eps0 = 0;
  double eps1 = 0;
};

// Throws GapViolation when a curve's extremal length lands where the
// decomposition would be ambiguous.
ThickThin thick_thin(const Surface& s, const ThickThinOptions& opts = {});

struct MarkedCurve {
  CurveId id;
  double ext = 0;    // extremal length
  double twist = 0;  // real twist coordinate of the transversal
};

struct PieceMarking {
  Piece piece = Piece::Whole;
  Slope slope;       // shortest essential curve of the piece
  double ext = 0;    // its extremal length in the surface
  double twist = 0;  // transversal twist coordinate around that slope
};

// The greedy short marking: the systole slope of every thick piece plus the
// short curves with their lengths and flat-perpendicular twists.
struct CoarseMarking {
  Topology topology = Topology::Torus;
  std::vector<MarkedCurve> short_curves;
  std::vector<PieceMarking> pieces;
  double eps0 = 0;
  double eps1 = 0;

  const PieceMarking* find_piece(Piece p) const;
  bool is_short(const CurveId& id) const;
  std::optional<MarkedCurve> find_short(const CurveId& id) const;
};

CoarseMarking short_marking(const Surface& s, const ThickThinOptions& opts = {});

// Extremal-length estimate of gamma from marking data alone: the sum of
// (1/l + l * twist^2) * i(alpha, gamma)^2 over the marking curves.  Rejects
// gamma equal to a marking curve (read its length directly instead).
double length_from_marking(const CoarseMarking& mu, const Slope& gamma);

}  // namespace teich

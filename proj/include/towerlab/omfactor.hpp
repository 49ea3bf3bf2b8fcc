#pragma once

// Places of K(x, y) above a place of K(x) (or of K(y)), computed by
// recursive Newton-polygon refinement over the completion at that place.
//
// Slope convention: a polygon segment of slope s collects the roots of
// valuation -s. Segments are returned in order of increasing slope, i.e.
// decreasing root valuation.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "towerlab/bivar.hpp"
#include "towerlab/ratfunc.hpp"
#include "towerlab/workspace.hpp"

namespace towerlab {

inline constexpr int kDefaultMaxDepth = 8;

/// Reduced fraction with positive denominator.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Slope make(std::int64_t num, std::int64_t den);
  bool operator==(const Slope&) const = default;
  std::string to_string() const;
};

struct LatticePoint {
  int index = 0;
  std::int64_t valuation = 0;  // kInfiniteValuation for a zero coefficient
};

struct NPSegment {
  Slope slope;
  int length = 0;
  /// Lattice points of the input lying on the segment, endpoints included.
  std::vector<LatticePoint> points;
};

/// Lower convex hull of the finite points. Throws DegeneratePolygon if
/// fewer than two finite points are given.
std::vector<NPSegment> newton_polygon(std::span<const LatticePoint> points);

enum class Side { X, Y };

std::string to_string(Side side);

/// One refinement step: the fibre variable was shifted by `shift`
/// (a monomial in the local uniformizer) after the cluster with root
/// valuation `slope` and residual factor `residual` was found repeated.
struct RefinementLevel {
  std::string shift;
  Slope root_valuation;
  std::string residual;
  int multiplicity = 1;
};

namespace detail {
struct LocalPlace;
}

struct PlaceExt {
  RatPlace base;
  Side side = Side::X;
  /// Refinement chain leading to the place, followed by its final level
  /// (the segment and simple residual factor that determine it).
  std::vector<RefinementLevel> refinement;
  int e = 1;
  int f = 1;
  int dmin = 0;
  int dmax = 0;
  std::optional<int> d_exact;
  std::shared_ptr<const detail::LocalPlace> local;

  bool is_wild() const;
};

struct DifferentBounds {
  int dmin = 0;
  int dmax = 0;
  std::optional<int> exact;
};

/// All places above P. side == Side::Y analyses F as a polynomial in x over
/// K(y), i.e. places above the place P of K(y). F must be squarefree in the
/// fibre variable; irreducibility is the caller's precondition.
std::vector<PlaceExt> places_above(const BivarPoly& F, const RatPlace& P, Side side = Side::X,
                                   int max_depth = kDefaultMaxDepth);
std::vector<PlaceExt> places_above(const BivarPoly& F, const RatPlace& P, Side side, int max_depth,
                                   Workspace& ws);

/// Tame: e - 1 exactly. Wild: [e, nu_Q(Z'(z))] where Z is the monic
/// integral model of F at the base place.
DifferentBounds different_bounds(const PlaceExt& pl, const BivarPoly& F);

/// nu_Q(h) for h in K[x, y] (always in the original x, y; the place's side
/// is taken into account). Refines further when the leading terms cancel.
std::int64_t valuation_at(const PlaceExt& pl, const BivarPoly& h);

/// Generalized Eisenstein: the polygon of F (in y over K(x)) at P is one
/// segment of length deg_y F whose slope has denominator deg_y F.
bool eisenstein_at(const BivarPoly& F, const RatPlace& P);

/// Lattice points (j, v_P(a_j)) of F = sum a_j(x) y^j at P.
std::vector<LatticePoint> polygon_points(const BivarPoly& F, const RatPlace& P);

/// Residual polynomial of a segment over the residue field of P.
FFPoly segment_residual(const BivarPoly& F, const RatPlace& P, const NPSegment& seg,
                        Workspace& ws);

}  // namespace towerlab

#pragma once

// Global data of the basic function field K(x, y) / K(x): ramification
// table, genus by Riemann-Hurwitz, and a place-counting genus oracle.

#include <cstdint>
#include <vector>

#include "towerlab/omfactor.hpp"

namespace towerlab {

struct RamRow {
  RatPlace base;
  std::vector<PlaceExt> places;
};

struct RamTable {
  int m = 0;
  std::vector<RamRow> rows;
};

struct GenusResult {
  int genus = 0;  // exact value, or the lower end of [genus_lo, genus_hi]
  bool exact = false;
  int genus_lo = 0;
  int genus_hi = 0;
  /// Degree of the different: (lo, hi), equal when exact.
  std::int64_t diff_lo = 0;
  std::int64_t diff_hi = 0;
};

/// Zeros of the formal y-discriminant and of the leading y-coefficient,
/// plus P_inf; sorted, without repetition.
std::vector<RatPlace> ramification_locus(const BivarPoly& F);

RamTable ramification_table(const BivarPoly& F, int max_depth, Workspace& ws);

/// Riemann-Hurwitz from the bounds in the table, using that the different
/// has even degree.
GenusResult genus_from_table(const RamTable& rt);

/// F must be absolutely irreducible and separable in y.
GenusResult genus_basic(const BivarPoly& F, int max_depth = kDefaultMaxDepth);
GenusResult genus_basic(const BivarPoly& F, int max_depth, Workspace& ws);

/// Place counts up to degree 2 * g_cap, L-polynomial, genus. Throws
/// CapTooSmall when no genus <= g_cap fits the counts.
int zeta_genus(const BivarPoly& F, int g_cap);
int zeta_genus(const BivarPoly& F, int g_cap, Workspace& ws);

/// Number of places of K(x, y) of degree n = 1..max_degree (index n - 1).
std::vector<std::int64_t> place_counts(const BivarPoly& F, int max_degree, Workspace& ws);

/// Fills in the single unknown different exponent from the oracle genus.
/// Throws InconsistentOracle when the solution is not an integer in
/// [dmin, dmax] (or, with nothing unknown, when the totals disagree).
RamTable reconcile_different(RamTable rt, int oracle_genus);

}  // namespace towerlab

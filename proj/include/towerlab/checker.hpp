#pragma once

// Hypothesis checker for the infinite-genus criterion on recursive towers,
// and the family (y-a)^m + b(y-a) = (x-a)^m / g(x) with m = q + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/omfactor.hpp"
#include "towerlab/pyramid.hpp"

namespace towerlab {

struct TowerSpec {
  BivarPoly F;
  int m = 0;  // deg_y F
  int deg_x = 0;
  bool non_skew = false;  // deg_x F == deg_y F
};

TowerSpec make_tower_spec(const BivarPoly& F);

struct Condition {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremVerdict {
  bool holds = false;
  std::vector<Condition> conditions;
  /// Reasons of the failed conditions, in check order.
  std::vector<std::string> failed_conditions;
  std::optional<PlaceExt> q_over_fy;  // Q above P_f(y)
  std::optional<PlaceExt> q_over_fx;  // the same place seen above P_f(x)
  std::optional<PlaceExt> q_prime;    // wild place above P_f(x)
  std::optional<RamHypotheses> hypotheses;
  std::string conclusion = "None";  // "InfiniteGenus" when holds
  std::vector<std::string> notes;
};

/// f must be monic irreducible over the field of F. Preconditions
/// (m >= 2, non-skew, irreducible over K(x) and K(y)) are reported as
/// failed conditions. Throws IdentificationFailed when the place above
/// P_f(y) cannot be matched unambiguously on the x side.
TheoremVerdict check_theorem(const BivarPoly& F, const FFPoly& f, int max_depth = kDefaultMaxDepth);
TheoremVerdict check_theorem(const BivarPoly& F, const FFPoly& f, int max_depth, Workspace& ws);

struct FamilyParams {
  FieldPtr field;
  std::uint64_t q = 0;
  Elem a = 0;
  Elem b = 0;
  FFPoly g;

  int m() const { return static_cast<int>(q) + 1; }
};

/// Violated constraints, each named; empty when admissible.
std::vector<std::string> family_violations(const FamilyParams& params);

/// F = g(x) [(y-a)^m + b(y-a)] - (x-a)^m. Throws InvalidParams naming the
/// first violated constraint.
TowerSpec build_family(const FamilyParams& params);

struct FactCheck {
  std::string id;  // "a" .. "g"
  std::string description;
  bool passed = false;
  std::string detail;
  std::vector<std::string> consumed;  // parameter constraints the check relies on
};

struct FamilyReport {
  TowerSpec tower;
  Elem c = 0;  // c^q = b
  std::vector<FactCheck> facts;
  bool all_passed = false;
  std::vector<std::string> notes;
};

FamilyReport verify_family_facts(const FamilyParams& params, int max_depth = kDefaultMaxDepth);
FamilyReport verify_family_facts(const FamilyParams& params, int max_depth, Workspace& ws);

}  // namespace towerlab

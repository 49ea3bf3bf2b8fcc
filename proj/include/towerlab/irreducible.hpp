#pragma once

// Irreducibility of F in K(x)[y].

#include <optional>
#include <string>

#include "towerlab/bivar.hpp"
#include "towerlab/workspace.hpp"

namespace towerlab {

struct IrreducibilityResult {
  bool irreducible = false;
  /// "degree one", "eisenstein at P_inf", "local degrees", "hensel", ...
  std::string method;
  /// A proper factor over K when reducible and one was found.
  std::optional<BivarPoly> factor;
};

/// Sound and, for separable F, complete: Eisenstein and local-degree
/// certificates first, then Hensel lifting at a good specialization with
/// recombination of the lifted factors. Throws Inconclusive when no test
/// decides (inseparable F without a certificate, or too many local factors).
IrreducibilityResult irreducibility(const BivarPoly& F, Workspace& ws);

bool is_irreducible_over_ratfield(const BivarPoly& F);
bool is_irreducible_over_ratfield(const BivarPoly& F, Workspace& ws);

/// Irreducible over GF(q^l)(x) for every prime l dividing deg_y F, which
/// covers every constant field extension.
bool is_absolutely_irreducible(const BivarPoly& F, Workspace& ws);

/// F with its content in K[x] divided out.
BivarPoly primitive_part_x(const BivarPoly& F);

}  // namespace towerlab

#pragma once

#include <cstdint>

#include "towerlab/ffield.hpp"
#include "towerlab/poly.hpp"

namespace towerlab {

/// Mutable per-analysis state: the field cache and the factoring seed.
/// One workspace per thread.
struct Workspace {
  FieldCache fields;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace towerlab

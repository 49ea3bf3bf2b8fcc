#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "towerlab/bivar.hpp"
#include "towerlab/error.hpp"
#include "towerlab/irreducible.hpp"
#include "towerlab/parse.hpp"

namespace towerlab::test {

template <class F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline BivarPoly P(const FieldPtr& K, const std::string& s) { return parse_poly(K, s); }
inline FFPoly U(const FieldPtr& K, const std::string& s) { return parse_univariate(K, s); }

// Generators. Every property suite seeds its own engine, so failures replay.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  Elem elem(const FieldPtr& K) { return below(K->size()); }
  Elem nonzero(const FieldPtr& K) { return 1 + below(K->size() - 1); }

  FFPoly poly(const FieldPtr& K, int deg) {
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& e : c) e = elem(K);
    c.back() = nonzero(K);
    return FFPoly(K, c);
  }
  FFPoly monic(const FieldPtr& K, int deg) { return poly(K, deg).monic(); }

  // Random F with deg_y F = dy exactly and x-degrees at most dx.
  BivarPoly bivar(const FieldPtr& K, int dy, int dx) {
    std::vector<FFPoly> ys;
    for (int j = 0; j <= dy; ++j) ys.push_back(poly(K, between(0, dx)));
    return BivarPoly(K, ys);
  }
};

// Random F over K with 1 <= deg_y <= 4 that is irreducible over K(x) and
// separable in y. Inconclusive irreducibility results are skipped.
inline std::optional<BivarPoly> random_irreducible(Gen& g, const FieldPtr& K, Workspace& ws) {
  const int dy = g.between(1, 4);
  BivarPoly F = g.bivar(K, dy, g.between(1, 3));
  // sprinkle zero coefficients so that polygons are not all flat
  std::vector<FFPoly> ys = F.ycoeffs();
  for (std::size_t j = 0; j + 1 < ys.size(); ++j)
    if (g.below(3) == 0) ys[j] = FFPoly(K);
  if (ys.front().is_zero()) ys.front() = g.poly(K, g.between(1, 3));
  F = BivarPoly(K, ys);
  if (F.derivative_y().is_zero() || discriminant_y(F).is_zero()) return std::nullopt;
  try {
    if (!is_irreducible_over_ratfield(F, ws)) return std::nullopt;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Inconclusive) return std::nullopt;
    throw;
  }
  return F;
}

}  // namespace towerlab::test

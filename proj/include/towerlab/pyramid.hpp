#pragma once

// Climbing a recursive tower: Abhyankar propagation through the compositum
// diagram of the first i+1 steps, different transitivity, per-level lower
// bounds, and the divergence test for the series sum c_i / [T_{i+1}:T_i].

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace towerlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "a/b", or "a" for integers.
std::string format_rational(const Rational& r);

/// m = deg F, n = e(Q|P_f(x)), r = e(Q'|P_f(x)), p the characteristic,
/// d_prime_min a lower bound for d(Q'|P_f(x)) (r when unset).
struct RamHypotheses {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t p = 0;
  std::optional<std::int64_t> d_prime_min;

  std::int64_t d_prime() const { return d_prime_min.value_or(r); }
};

/// Empty when the hypotheses are usable; otherwise one reason per violation.
std::vector<std::string> hypothesis_violations(const RamHypotheses& h);

/// lcm(e1, e2); throws BothWild when p divides both.
std::int64_t abhyankar_e(std::int64_t e1, std::int64_t e2, std::int64_t p);

/// d(P'|P) for P' over Q over P: e(P'|Q) * d(Q|P) + d(P'|Q).
BigInt different_transitivity(const BigInt& d_upper, const BigInt& e_upper, const BigInt& d_lower);

struct LevelBound {
  int i = 0;
  BigInt degree;   // [T_i : T_0] = m^i
  BigInt bound;    // lower bound for d(P'|P)
  Rational ratio;  // bound / m^i
  bool meets_half = false;
};

enum class ClimbVerdict { InfiniteGenus, Inconclusive };

std::string to_string(ClimbVerdict v);

struct PyramidReport {
  RamHypotheses hypotheses;
  std::vector<LevelBound> levels;  // i = 0 .. levels
  Rational c;                      // certified constant with d >= c * [T_i:T_0]
  std::vector<Rational> partial_sums;  // of c / m, i = 1 .. levels
  ClimbVerdict verdict = ClimbVerdict::Inconclusive;
  std::vector<std::string> notes;
};

/// Closed-form bound m^i d' + (m^i - 1)(1 - r) for i = 0..levels. Throws
/// InvalidHypotheses when the hypotheses are violated.
PyramidReport climb(const RamHypotheses& h, int levels);

// Explicit diagram for level i. Node (j, k) is K(x_j, ..., x_{j+k}); its
// children are (j, k-1) on the left and (j+1, k-1) on the right. Row 0 holds
// the places P_j = P_f(x_j); (i, 1) is Q', (j, 1) for j < i is Q_{j+1};
// the top (0, i+1) is P' and (0, i) is P.
struct PyramidNode {
  int j = 0;
  int k = 0;
  std::string name;
  std::int64_t e_left = 0;   // e over the left child; 0 if not determined
  std::int64_t e_right = 0;  // e over the right child; 0 if not determined
};

struct PyramidWalk {
  int level = 0;
  std::vector<PyramidNode> nodes;  // by row k, then j
  BigInt d_top_over_Pi;            // d(P'|P_i) along the tame spine above Q'
  BigInt d_P_over_Pi;              // d(P|P_i)
  std::int64_t e_top_over_P = 0;   // e(P'|P)
  BigInt bound;                    // d(P'|P) >= d(P'|P_i) - e(P'|P) d(P|P_i)

  const PyramidNode& node(int j, int k) const;
};

PyramidWalk pyramid_walk(const RamHypotheses& h, int i);

/// ASCII drawing of the diagram with edge labels.
std::string render_pyramid(const PyramidWalk& w);

// Sequences for the divergence test; index i >= 1.
struct SequenceSpec {
  enum class Kind { Constant, Periodic, Explicit };

  Kind kind = Kind::Constant;
  std::vector<Rational> values;  // Constant: one value; Periodic: one period
  std::function<Rational(int)> term;
  std::optional<Rational> lower_bound;  // certificate for Explicit: term(i) >= lower_bound
  std::optional<Rational> upper_bound;  // certificate for Explicit: term(i) <= upper_bound

  static SequenceSpec constant(Rational v);
  static SequenceSpec periodic(std::vector<Rational> period);
  static SequenceSpec explicit_terms(std::function<Rational(int)> f, std::optional<Rational> lower = std::nullopt,
                                     std::optional<Rational> upper = std::nullopt);

  Rational at(int i) const;
  std::optional<Rational> certified_min() const;
  std::optional<Rational> certified_max() const;
};

enum class SeriesVerdict { Diverges, Inconclusive };

std::string to_string(SeriesVerdict v);

struct SeriesReport {
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::vector<Rational> partial_sums;  // i = 1 .. horizon
  std::string reason;
};

/// Diverges only with a certified positive lower bound on c_i / deg_i;
/// never reports convergence.
SeriesReport series_divergence(const SequenceSpec& c, const SequenceSpec& degrees, int horizon);

}  // namespace towerlab

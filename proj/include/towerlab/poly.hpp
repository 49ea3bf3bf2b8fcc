#pragma once

// Dense univariate polynomials over a finite field, with factorization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "towerlab/ffield.hpp"

namespace towerlab {

/// Seed for the equal-degree splitting step. Factor output is sorted, so the
/// seed only affects running time, never results.
inline constexpr std::uint64_t kDefaultSeed = 0x746f7765726c6162ULL;

class FFPoly {
 public:
  explicit FFPoly(FieldPtr field) : field_(std::move(field)) {}
  FFPoly(FieldPtr field, std::vector<Elem> coeffs);

  static FFPoly constant(FieldPtr field, Elem c);
  static FFPoly monomial(FieldPtr field, Elem c, std::size_t deg);
  /// x - a
  static FFPoly linear(FieldPtr field, Elem a);
  /// Coefficients given as small integers reduced mod p.
  static FFPoly from_ints(FieldPtr field, const std::vector<std::int64_t>& c);

  const FieldPtr& field() const { return field_; }
  const FiniteField& F() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FFPoly operator+(const FFPoly& o) const;
  FFPoly operator-(const FFPoly& o) const;
  FFPoly operator*(const FFPoly& o) const;
  FFPoly operator-() const;
  FFPoly scaled(Elem c) const;
  FFPoly shifted(std::size_t k) const;  // times x^k

  FFPoly& operator+=(const FFPoly& o) { return *this = *this + o; }
  FFPoly& operator-=(const FFPoly& o) { return *this = *this - o; }
  FFPoly& operator*=(const FFPoly& o) { return *this = *this * o; }

  bool operator==(const FFPoly& o) const {
    return c_ == o.c_ && field_->same_as(*o.field_);
  }

  Elem eval(Elem x) const;
  FFPoly monic() const;
  FFPoly derivative() const;
  FFPoly pow(std::uint64_t e) const;
  /// Coefficientwise image under an embedding.
  FFPoly mapped(const Embedding& emb) const;
  /// p(x + a)
  FFPoly taylor_shift(Elem a) const;
  /// Reverse of coefficient order relative to degree d >= degree().
  FFPoly reversed(std::size_t d) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Deterministic total order: degree first, then coefficients from the
/// constant term upward.
bool poly_less(const FFPoly& a, const FFPoly& b);

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly operator%(const FFPoly& a, const FFPoly& b);
FFPoly operator/(const FFPoly& a, const FFPoly& b);
/// Monic gcd (zero if both are zero).
FFPoly poly_gcd(const FFPoly& a, const FFPoly& b);
FFPoly poly_derivative(const FFPoly& f);
FFPoly powmod(const FFPoly& base, std::uint64_t e, const FFPoly& mod);

struct Factor {
  FFPoly poly;
  int multiplicity;
};

/// Monic irreducible factors with multiplicities, sorted by poly_less.
std::vector<Factor> poly_factor(const FFPoly& f, std::uint64_t seed = kDefaultSeed);
bool is_irreducible(const FFPoly& f);
/// Distinct roots in the coefficient field, ascending.
std::vector<Elem> roots_in_field(const FFPoly& f, std::uint64_t seed = kDefaultSeed);
/// Monic irreducible polynomials of the given degree, in poly_less order.
std::vector<FFPoly> monic_irreducibles(const FieldPtr& field, int degree);

}  // namespace towerlab

#pragma once

// Places and valuations of the rational function field K(x).

#include <climits>
#include <cstdint>
#include <optional>
#include <string>

#include "towerlab/poly.hpp"

namespace towerlab {

/// Valuation of the zero function.
inline constexpr std::int64_t kInfiniteValuation = INT64_MAX;

class RatPlace {
 public:
  /// Zero of a monic irreducible polynomial.
  static RatPlace finite(const FFPoly& f);
  static RatPlace infinity(FieldPtr field);

  bool is_infinite() const { return !poly_.has_value(); }
  const FFPoly& poly() const;
  const FieldPtr& field() const { return field_; }
  int degree() const { return poly_ ? poly_->degree() : 1; }

  bool operator==(const RatPlace& o) const;
  /// Finite places ordered by poly_less, infinity last.
  bool operator<(const RatPlace& o) const;

  /// "P_inf" or "P_(x^2 + x + 1)" in the given variable.
  std::string to_string(const std::string& var = "x") const;

 private:
  RatPlace(FieldPtr field, std::optional<FFPoly> poly) : field_(std::move(field)), poly_(std::move(poly)) {}

  FieldPtr field_;
  std::optional<FFPoly> poly_;
};

inline int place_degree(const RatPlace& P) { return P.degree(); }

/// num/den with gcd 1 and den monic.
class RatFunc {
 public:
  RatFunc(FFPoly num, FFPoly den);
  explicit RatFunc(FFPoly num);

  const FFPoly& num() const { return num_; }
  const FFPoly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  FFPoly num_;
  FFPoly den_;
};

/// Order of vanishing of a polynomial at a place (kInfiniteValuation for 0).
std::int64_t valuation(const FFPoly& f, const RatPlace& P);
std::int64_t valuation(const RatFunc& r, const RatPlace& P);

/// Residue field of a place with the data to evaluate functions there:
/// GF(q^deg P), the embedding of K into it, and the chosen root of P.
struct ResidueField {
  FieldPtr field;
  Embedding from_base;
  Elem root = 0;  // smallest root of P's polynomial; unused at infinity
};

ResidueField residue_field(const RatPlace& P, FieldCache& cache);

/// Class of r in the residue field of P. Throws PoleAtPlace when r has a
/// pole there.
FFElem residue(const RatFunc& r, const RatPlace& P, FieldCache& cache);
FFElem residue(const RatFunc& r, const RatPlace& P);

}  // namespace towerlab

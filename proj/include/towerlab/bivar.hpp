#pragma once

#include <string>
#include <vector>

#include "towerlab/poly.hpp"

namespace towerlab {

/// Polynomial in K[x, y], stored as its coefficients in y (each an FFPoly
/// in x). Trailing zero y-coefficients are trimmed.
class BivarPoly {
 public:
  explicit BivarPoly(FieldPtr field) : field_(std::move(field)) {}
  BivarPoly(FieldPtr field, std::vector<FFPoly> ycoeffs);

  static BivarPoly constant(FieldPtr field, Elem c);
  static BivarPoly x(FieldPtr field);
  static BivarPoly y(FieldPtr field);
  static BivarPoly from_x(const FFPoly& p);
  static BivarPoly from_y(const FFPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<FFPoly>& ycoeffs() const { return y_; }
  /// Coefficient of y^j as a polynomial in x (zero past the end).
  FFPoly ycoeff(std::size_t j) const;
  Elem coeff(std::size_t i, std::size_t j) const;

  bool is_zero() const { return y_.empty(); }
  int deg_y() const { return static_cast<int>(y_.size()) - 1; }
  int deg_x() const;
  FFPoly lead_y() const { return y_.empty() ? FFPoly(field_) : y_.back(); }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly pow(unsigned e) const;
  BivarPoly scaled(Elem c) const;
  bool operator==(const BivarPoly& o) const;

  BivarPoly derivative_y() const;
  BivarPoly derivative_x() const;
  /// Exchanges the roles of x and y.
  BivarPoly transposed() const;
  BivarPoly mapped(const Embedding& emb) const;
  /// F(x0, y)
  FFPoly eval_x(Elem x0) const;
  /// Content in K[x] (monic gcd of the y-coefficients).
  FFPoly content_x() const;

  /// Canonical text: monomials by descending y-degree then x-degree,
  /// e.g. "x*y^3 + y^3 + x*y + y + x^3". Re-parses to the same polynomial.
  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<FFPoly> y_;
};

/// Determinant of a square matrix over K[x] (fraction-free elimination).
FFPoly poly_det(std::vector<std::vector<FFPoly>> m);

/// Res_y(F, G) in K[x], with the Sylvester matrix built for the formal
/// y-degrees degF >= deg_y F and degG >= deg_y G (-1 means actual).
FFPoly resultant_y(const BivarPoly& F, const BivarPoly& G, int degF = -1, int degG = -1);

/// Res_y(F, dF/dy) with dF/dy taken at formal degree deg_y F - 1. Vanishes at
/// x0 exactly when F(x0, y) has a repeated root or drops degree.
FFPoly discriminant_y(const BivarPoly& F);

}  // namespace towerlab

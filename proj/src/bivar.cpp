#include "towerlab/bivar.hpp"

#include <algorithm>
#include <sstream>

namespace towerlab {

BivarPoly::BivarPoly(FieldPtr field, std::vector<FFPoly> ycoeffs)
    : field_(std::move(field)), y_(std::move(ycoeffs)) {
  trim();
}

void BivarPoly::trim() {
  while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
}

BivarPoly BivarPoly::constant(FieldPtr field, Elem c) {
  FFPoly k = FFPoly::constant(field, c);
  return BivarPoly(std::move(field), {std::move(k)});
}

BivarPoly BivarPoly::x(FieldPtr field) {
  FFPoly k(field, {0, 1});
  return BivarPoly(std::move(field), {std::move(k)});
}

BivarPoly BivarPoly::y(FieldPtr field) {
  std::vector<FFPoly> v{FFPoly(field), FFPoly::constant(field, 1)};
  return BivarPoly(std::move(field), std::move(v));
}

BivarPoly BivarPoly::from_x(const FFPoly& p) { return BivarPoly(p.field(), {p}); }

BivarPoly BivarPoly::from_y(const FFPoly& p) {
  std::vector<FFPoly> v;
  for (auto c : p.coeffs()) v.push_back(FFPoly::constant(p.field(), c));
  return BivarPoly(p.field(), std::move(v));
}

FFPoly BivarPoly::ycoeff(std::size_t j) const { return j < y_.size() ? y_[j] : FFPoly(field_); }

Elem BivarPoly::coeff(std::size_t i, std::size_t j) const { return j < y_.size() ? y_[j].coeff(i) : 0; }

int BivarPoly::deg_x() const {
  int d = -1;
  for (const auto& c : y_) d = std::max(d, c.degree());
  return d;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::vector<FFPoly> r;
  for (std::size_t j = 0; j < std::max(y_.size(), o.y_.size()); ++j) r.push_back(ycoeff(j) + o.ycoeff(j));
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  std::vector<FFPoly> r;
  for (std::size_t j = 0; j < std::max(y_.size(), o.y_.size()); ++j) r.push_back(ycoeff(j) - o.ycoeff(j));
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return BivarPoly(field_);
  std::vector<FFPoly> r(y_.size() + o.y_.size() - 1, FFPoly(field_));
  for (std::size_t i = 0; i < y_.size(); ++i)
    for (std::size_t j = 0; j < o.y_.size(); ++j) r[i + j] += y_[i] * o.y_[j];
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::operator-() const {
  std::vector<FFPoly> r;
  for (const auto& c : y_) r.push_back(-c);
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly r = constant(field_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BivarPoly BivarPoly::scaled(Elem c) const {
  std::vector<FFPoly> r;
  for (const auto& p : y_) r.push_back(p.scaled(c));
  return BivarPoly(field_, std::move(r));
}

bool BivarPoly::operator==(const BivarPoly& o) const {
  if (!field_->same_as(*o.field_) || y_.size() != o.y_.size()) return false;
  for (std::size_t j = 0; j < y_.size(); ++j)
    if (!(y_[j] == o.y_[j])) return false;
  return true;
}

BivarPoly BivarPoly::derivative_y() const {
  std::vector<FFPoly> r;
  for (std::size_t j = 1; j < y_.size(); ++j)
    r.push_back(y_[j].scaled(field_->from_int(static_cast<std::int64_t>(j % field_->characteristic()))));
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::derivative_x() const {
  std::vector<FFPoly> r;
  for (const auto& c : y_) r.push_back(c.derivative());
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::transposed() const {
  const int dx = deg_x();
  std::vector<FFPoly> r;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Elem> c(y_.size(), 0);
    for (std::size_t j = 0; j < y_.size(); ++j) c[j] = y_[j].coeff(i);
    r.emplace_back(field_, std::move(c));
  }
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::mapped(const Embedding& emb) const {
  std::vector<FFPoly> r;
  for (const auto& c : y_) r.push_back(c.mapped(emb));
  return BivarPoly(emb.dst, std::move(r));
}

FFPoly BivarPoly::eval_x(Elem x0) const {
  std::vector<Elem> c;
  for (const auto& p : y_) c.push_back(p.eval(x0));
  return FFPoly(field_, std::move(c));
}

FFPoly BivarPoly::content_x() const {
  FFPoly g(field_);
  for (const auto& c : y_) g = poly_gcd(g, c);
  return g;
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = y_.size(); j-- > 0;) {
    const auto& c = y_[j].coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (!c[i]) continue;
      if (!first) os << " + ";
      first = false;
      std::string coef = field_->format(c[i]);
      const bool unit = c[i] == 1;
      const bool compound = coef.find('+') != std::string::npos;
      if (compound) coef = "(" + coef + ")";
      std::vector<std::string> parts;
      if (!unit || (i == 0 && j == 0)) parts.push_back(coef);
      if (i > 0) parts.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
      if (j > 0) parts.push_back(j == 1 ? "y" : "y^" + std::to_string(j));
      for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
  }
  return os.str();
}

FFPoly poly_det(std::vector<std::vector<FFPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return FFPoly::constant(nullptr, 1);
  const FieldPtr field = m[0][0].field();
  bool negate = false;
  FFPoly prev = FFPoly::constant(field, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return FFPoly(field);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        FFPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;
      }
      m[i][k] = FFPoly(field);
    }
    prev = m[k][k];
  }
  FFPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

FFPoly resultant_y(const BivarPoly& F, const BivarPoly& G, int degF, int degG) {
  const int m = degF < 0 ? F.deg_y() : degF;
  const int n = degG < 0 ? G.deg_y() : degG;
  require(m >= F.deg_y() && n >= G.deg_y(), ErrorCode::InvalidArgument, "formal degree below actual degree");
  const FieldPtr field = F.field();
  if (m + n == 0) return FFPoly::constant(field, 1);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<FFPoly>> syl(size, std::vector<FFPoly>(size, FFPoly(field)));
  // rows 0..n-1: shifts of F; rows n..n+m-1: shifts of G (coefficients high to low)
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[r][r + i] = F.ycoeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[n + r][r + i] = G.ycoeff(n - i);
  return poly_det(std::move(syl));
}

FFPoly discriminant_y(const BivarPoly& F) {
  const int m = F.deg_y();
  require(m >= 1, ErrorCode::InvalidArgument, "discriminant needs deg_y >= 1");
  const BivarPoly Fy = F.derivative_y();
  require(!Fy.is_zero(), ErrorCode::Inseparable, "dF/dy vanishes identically");
  return resultant_y(F, Fy, m, m - 1);
}

}  // namespace towerlab

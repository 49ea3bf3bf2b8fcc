#include "towerlab/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace towerlab {

FFPoly::FFPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void FFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::constant(FieldPtr field, Elem c) { return FFPoly(std::move(field), {c}); }

FFPoly FFPoly::monomial(FieldPtr field, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return FFPoly(std::move(field), std::move(v));
}

FFPoly FFPoly::linear(FieldPtr field, Elem a) {
  const Elem na = field->neg(a);
  return FFPoly(std::move(field), {na, 1});
}

FFPoly FFPoly::from_ints(FieldPtr field, const std::vector<std::int64_t>& c) {
  std::vector<Elem> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(field->from_int(x));
  return FFPoly(std::move(field), std::move(v));
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
  const auto& f = *field_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(i), o.coeff(i));
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
  const auto& f = *field_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(coeff(i), o.coeff(i));
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
  if (is_zero() || o.is_zero()) return FFPoly(field_);
  const auto& f = *field_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
  }
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::operator-() const {
  std::vector<Elem> r(c_);
  for (auto& x : r) x = field_->neg(x);
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::scaled(Elem c) const {
  std::vector<Elem> r(c_);
  for (auto& x : r) x = field_->mul(x, c);
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return FFPoly(field_, std::move(r));
}

Elem FFPoly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

FFPoly FFPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

FFPoly FFPoly::derivative() const {
  if (c_.size() <= 1) return FFPoly(field_);
  std::vector<Elem> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())), c_[i]);
  return FFPoly(field_, std::move(r));
}

FFPoly FFPoly::pow(std::uint64_t e) const {
  FFPoly r = constant(field_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FFPoly FFPoly::mapped(const Embedding& emb) const {
  require(emb.src->same_as(*field_), ErrorCode::Internal, "embedding source mismatch");
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = emb.apply(c_[i]);
  return FFPoly(emb.dst, std::move(r));
}

FFPoly FFPoly::taylor_shift(Elem a) const {
  FFPoly r(field_);
  const FFPoly lin(field_, {a, 1});
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(field_, c_[i]);
  return r;
}

FFPoly FFPoly::reversed(std::size_t d) const {
  std::vector<Elem> r(d + 1, 0);
  for (std::size_t i = 0; i < c_.size() && i <= d; ++i) r[d - i] = c_[i];
  return FFPoly(field_, std::move(r));
}

std::string FFPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = field_->format(c_[i]);
    const bool compound = c.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + c + ")" : c);
      continue;
    }
    if (c_[i] != 1) os << (compound ? "(" + c + ")" : c) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

bool poly_less(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
  require(!b.is_zero(), ErrorCode::Internal, "polynomial division by zero");
  const auto& f = b.F();
  if (a.degree() < b.degree()) return {FFPoly(b.field()), a};
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(a.degree() - b.degree() + 1, 0);
  const Elem il = f.inv(b.lead());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = f.mul(r[i], il);
    if (!c) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {FFPoly(b.field(), std::move(q)), FFPoly(b.field(), std::move(r))};
}

FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divmod(a, b).second; }
FFPoly operator/(const FFPoly& a, const FFPoly& b) { return divmod(a, b).first; }

FFPoly poly_gcd(const FFPoly& a, const FFPoly& b) {
  FFPoly x = a, y = b;
  while (!y.is_zero()) {
    FFPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FFPoly poly_derivative(const FFPoly& f) { return f.derivative(); }

FFPoly powmod(const FFPoly& base, std::uint64_t e, const FFPoly& mod) {
  FFPoly r = FFPoly::constant(mod.field(), 1) % mod;
  FFPoly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

namespace {

FFPoly x_poly(const FieldPtr& f) { return FFPoly(f, {0, 1}); }

// p-th root of a polynomial whose derivative vanishes.
FFPoly pth_root(const FFPoly& f) {
  const auto& F = f.F();
  const std::uint32_t p = F.characteristic();
  std::vector<Elem> r(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.frobenius_root(f.coeff(i * p), 1);
  return FFPoly(f.field(), std::move(r));
}

void squarefree(const FFPoly& f, int mult, std::vector<Factor>& out) {
  if (f.degree() <= 0) return;
  FFPoly c = poly_gcd(f, f.derivative());
  FFPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FFPoly y = poly_gcd(w, c);
    FFPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(f.F().characteristic()), out);
}

std::vector<std::pair<FFPoly, int>> distinct_degree(const FFPoly& f) {
  std::vector<std::pair<FFPoly, int>> out;
  const std::uint64_t q = f.F().size();
  FFPoly rest = f;
  const FFPoly x = x_poly(f.field());
  FFPoly h = x % rest;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, q, rest);
    FFPoly g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const FFPoly& g, int d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const auto& F = g.F();
  const std::uint64_t q = F.size();
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  for (;;) {
    std::vector<Elem> a(g.degree());
    for (auto& c : a) c = dist(rng);
    FFPoly r(g.field(), a);
    if (r.degree() <= 0) continue;
    FFPoly b(g.field());
    if (F.characteristic() == 2) {
      // absolute trace to GF(2) of the degree-d extension
      FFPoly t = r;
      b = r;
      const std::uint32_t steps = F.degree() * static_cast<std::uint32_t>(d);
      for (std::uint32_t i = 1; i < steps; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      FFPoly t = r, norm = r;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        norm = (norm * t) % g;
      }
      b = powmod(norm, (q - 1) / 2, g) - FFPoly::constant(g.field(), 1);
    }
    FFPoly u = poly_gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> poly_factor(const FFPoly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<Factor> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<FFPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& pc : pieces) out.push_back({std::move(pc), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (!(a.poly == b.poly)) return poly_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  // merge identical factors coming from different squarefree layers
  std::vector<Factor> merged;
  for (auto& fc : out) {
    if (!merged.empty() && merged.back().poly == fc.poly)
      merged.back().multiplicity += fc.multiplicity;
    else
      merged.push_back(std::move(fc));
  }
  return merged;
}

bool is_irreducible(const FFPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FFPoly g = f.monic();
  const std::uint64_t q = f.F().size();
  const FFPoly x = x_poly(f.field());
  std::vector<FFPoly> frob;  // frob[j] = x^(q^j) mod g
  frob.push_back(x % g);
  for (int j = 1; j <= n; ++j) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[n] == x % g)) return false;
  int rest = n;
  for (int r = 2; r <= rest; ++r) {
    if (rest % r) continue;
    while (rest % r == 0) rest /= r;
    if (poly_gcd(g, frob[n / r] - x).degree() > 0) return false;
  }
  return true;
}

std::vector<Elem> roots_in_field(const FFPoly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::InvalidArgument, "roots of the zero polynomial");
  if (f.degree() <= 0) return {};
  const FFPoly g = f.monic();
  const FFPoly x = x_poly(f.field());
  FFPoly lin = poly_gcd(g, powmod(x, f.F().size(), g) - x);
  std::vector<Elem> roots;
  if (lin.degree() <= 0) return roots;
  std::mt19937_64 rng(seed);
  std::vector<FFPoly> pieces;
  equal_degree(lin, 1, rng, pieces);
  for (const auto& pc : pieces) roots.push_back(f.F().neg(pc.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FFPoly> monic_irreducibles(const FieldPtr& field, int degree) {
  require(degree >= 1, ErrorCode::InvalidArgument, "degree must be positive");
  const std::uint64_t q = field->size();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) {
    require(count <= 20'000'000 / q, ErrorCode::InvalidArgument, "too many candidate polynomials");
    count *= q;
  }
  std::vector<FFPoly> out;
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (int i = 0; i < degree; ++i) {
      c[i] = rest % q;
      rest /= q;
    }
    if (degree > 1 && c[0] == 0) continue;
    FFPoly f(field, c);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace towerlab

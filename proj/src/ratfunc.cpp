#include "towerlab/ratfunc.hpp"

namespace towerlab {

RatPlace RatPlace::finite(const FFPoly& f) {
  require(f.degree() >= 1 && f.is_monic() && is_irreducible(f), ErrorCode::InvalidArgument,
          "place polynomial must be monic irreducible: " + f.to_string());
  return RatPlace(f.field(), f);
}

RatPlace RatPlace::infinity(FieldPtr field) { return RatPlace(std::move(field), std::nullopt); }

const FFPoly& RatPlace::poly() const {
  require(poly_.has_value(), ErrorCode::InvalidArgument, "the infinite place has no polynomial");
  return *poly_;
}

bool RatPlace::operator==(const RatPlace& o) const {
  if (is_infinite() || o.is_infinite()) return is_infinite() == o.is_infinite();
  return *poly_ == *o.poly_;
}

bool RatPlace::operator<(const RatPlace& o) const {
  if (is_infinite()) return false;
  if (o.is_infinite()) return true;
  return poly_less(*poly_, *o.poly_);
}

std::string RatPlace::to_string(const std::string& var) const {
  if (is_infinite()) return "P_inf";
  return "P_(" + poly_->to_string(var) + ")";
}

RatFunc::RatFunc(FFPoly num, FFPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), ErrorCode::InvalidArgument, "zero denominator");
  if (num_.is_zero()) {
    den_ = FFPoly::constant(den_.field(), 1);
    return;
  }
  const FFPoly g = poly_gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const Elem l = den_.lead();
  if (l != 1) {
    const Elem il = den_.F().inv(l);
    num_ = num_.scaled(il);
    den_ = den_.scaled(il);
  }
}

RatFunc::RatFunc(FFPoly num) : RatFunc(num, FFPoly::constant(num.field(), 1)) {}

RatFunc RatFunc::operator+(const RatFunc& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
RatFunc RatFunc::operator-(const RatFunc& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
RatFunc RatFunc::operator*(const RatFunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  require(!o.is_zero(), ErrorCode::InvalidArgument, "division by the zero function");
  return {num_ * o.den_, den_ * o.num_};
}

std::int64_t valuation(const FFPoly& f, const RatPlace& P) {
  if (f.is_zero()) return kInfiniteValuation;
  if (P.is_infinite()) return -f.degree();
  std::int64_t v = 0;
  FFPoly rest = f;
  for (;;) {
    auto [q, r] = divmod(rest, P.poly());
    if (!r.is_zero()) return v;
    rest = std::move(q);
    ++v;
  }
}

std::int64_t valuation(const RatFunc& r, const RatPlace& P) {
  if (r.is_zero()) return kInfiniteValuation;
  return valuation(r.num(), P) - valuation(r.den(), P);
}

ResidueField residue_field(const RatPlace& P, FieldCache& cache) {
  const FieldPtr& K = P.field();
  if (P.is_infinite() || P.degree() == 1) {
    const Elem root = P.is_infinite() ? 0 : K->neg(P.poly().coeff(0));
    return {K, Embedding::identity(K), root};
  }
  FieldPtr R = cache.get(K->characteristic(), K->degree() * static_cast<std::uint32_t>(P.degree()));
  Embedding emb = make_embedding(K, R);
  const auto roots = roots_in_field(P.poly().mapped(emb));
  require(!roots.empty(), ErrorCode::Internal, "place polynomial has no root in its residue field");
  return {R, emb, roots.front()};
}

FFElem residue(const RatFunc& r, const RatPlace& P, FieldCache& cache) {
  const ResidueField rf = residue_field(P, cache);
  const std::int64_t v = valuation(r, P);
  require(v >= 0, ErrorCode::PoleAtPlace, "function has a pole at " + P.to_string());
  if (v > 0) return {rf.field, 0};
  const FiniteField& R = *rf.field;
  if (P.is_infinite()) {
    // deg num == deg den here
    return {rf.field, R.div(r.num().lead(), r.den().lead())};
  }
  const Elem n = r.num().mapped(rf.from_base).eval(rf.root);
  const Elem d = r.den().mapped(rf.from_base).eval(rf.root);
  return {rf.field, R.div(n, d)};
}

FFElem residue(const RatFunc& r, const RatPlace& P) {
  FieldCache cache;
  return residue(r, P, cache);
}

}  // namespace towerlab

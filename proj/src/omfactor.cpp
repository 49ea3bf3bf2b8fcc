#include "towerlab/omfactor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace towerlab {

Slope Slope::make(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorCode::InvalidArgument, "zero slope denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string Slope::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Side side) { return side == Side::X ? "x" : "y"; }

std::vector<NPSegment> newton_polygon(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts;
  for (const auto& pt : points)
    if (pt.valuation != kInfiniteValuation) pts.push_back(pt);
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.index != b.index ? a.index < b.index : a.valuation < b.valuation;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const LatticePoint& a, const LatticePoint& b) { return a.index == b.index; }),
            pts.end());
  require(pts.size() >= 2, ErrorCode::DegeneratePolygon, "Newton polygon needs two finite points");

  // lower hull (monotone chain), collinear points dropped from the vertex list
  std::vector<LatticePoint> hull;
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<__int128>(a.index - o.index) * (b.valuation - o.valuation) -
           static_cast<__int128>(a.valuation - o.valuation) * (b.index - o.index);
  };
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  std::vector<NPSegment> segs;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[i + 1];
    NPSegment seg;
    seg.slope = Slope::make(b.valuation - a.valuation, b.index - a.index);
    seg.length = b.index - a.index;
    for (const auto& pt : pts) {
      if (pt.index < a.index || pt.index > b.index) continue;
      if (static_cast<__int128>(pt.valuation - a.valuation) * (b.index - a.index) ==
          static_cast<__int128>(b.valuation - a.valuation) * (pt.index - a.index))
        seg.points.push_back(pt);
    }
    segs.push_back(std::move(seg));
  }
  return segs;
}

namespace detail {

// Laurent polynomial sum c[i] s^(low + i) over a finite field.
struct LPoly {
  std::int64_t low = 0;
  std::vector<Elem> c;

  bool zero() const { return c.empty(); }
  std::int64_t val() const { return zero() ? kInfiniteValuation : low; }
  Elem at(std::int64_t k) const {
    k -= low;
    return (k >= 0 && k < static_cast<std::int64_t>(c.size())) ? c[static_cast<std::size_t>(k)] : 0;
  }
};

using YPoly = std::vector<LPoly>;  // polynomial in the fibre variable

struct Cluster {
  Slope lambda;  // root valuation
  FFPoly psi;    // monic irreducible residual factor (unused for exact roots)
  int mult = 1;
  bool exact = false;  // the fibre variable vanishes exactly
};

// Local coordinates at a place: uniformizer s with t = tau * s^D (t the
// uniformizer of the base place) and fibre variable y_orig = yshift + y.
struct Frame {
  FieldPtr field;
  Embedding from_base;
  Elem root = 0;
  bool at_infinity = false;
  Elem tau = 1;
  std::int64_t D = 1;
  LPoly yshift;
  std::int64_t e_tame = 1;
  std::int64_t f_acc = 1;
  int depth = 0;
  std::optional<std::int64_t> above;  // only roots of valuation > above
  int expected = -1;
  std::vector<RefinementLevel> trail;
};

struct LocalPlace {
  BivarPoly Fo;  // fibre variable is y
  Frame frame;
  Cluster cluster;
  int e = 1;
  int f = 1;
};

}  // namespace detail

namespace {

using detail::Cluster;
using detail::Frame;
using detail::LocalPlace;
using detail::LPoly;
using detail::YPoly;

void normalize(LPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  std::size_t k = 0;
  while (k < a.c.size() && a.c[k] == 0) ++k;
  if (k) {
    a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(k));
    a.low += static_cast<std::int64_t>(k);
  }
  if (a.c.empty()) a.low = 0;
}

LPoly monomial(Elem c, std::int64_t k) {
  if (c == 0) return {};
  return {k, {c}};
}

LPoly add(const FiniteField& F, const LPoly& a, const LPoly& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  const std::int64_t lo = std::min(a.low, b.low);
  const std::int64_t hi = std::max(a.low + static_cast<std::int64_t>(a.c.size()),
                                   b.low + static_cast<std::int64_t>(b.c.size()));
  LPoly r{lo, std::vector<Elem>(static_cast<std::size_t>(hi - lo), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[static_cast<std::size_t>(a.low - lo) + i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    auto& slot = r.c[static_cast<std::size_t>(b.low - lo) + i];
    slot = F.add(slot, b.c[i]);
  }
  normalize(r);
  return r;
}

LPoly mul(const FiniteField& F, const LPoly& a, const LPoly& b) {
  if (a.zero() || b.zero()) return {};
  LPoly r{a.low + b.low, std::vector<Elem>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  normalize(r);
  return r;
}

LPoly map_lpoly(const Embedding& emb, const LPoly& a) {
  LPoly r = a;
  for (auto& x : r.c) x = emb.apply(x);
  return r;
}

// s_old = kappa * s^E
LPoly substitute(const FiniteField& F, const LPoly& a, Elem kappa, std::int64_t E) {
  if (a.zero()) return {};
  LPoly r{a.low * E, std::vector<Elem>((a.c.size() - 1) * static_cast<std::size_t>(E) + 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    const std::int64_t k = a.low + static_cast<std::int64_t>(i);
    r.c[i * static_cast<std::size_t>(E)] = F.mul(a.c[i], F.pow_signed(kappa, k));
  }
  normalize(r);
  return r;
}

std::string format_monomial(const FiniteField& F, Elem c, std::int64_t k) {
  std::string cs = F.format(c);
  if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
  if (k == 0) return cs;
  const std::string sk = k == 1 ? "s" : "s^" + std::to_string(k);
  return c == 1 ? sk : cs + "*" + sk;
}

YPoly transform(const BivarPoly& Fo, const Frame& fr) {
  const FiniteField& R = *fr.field;
  const LPoly X = fr.at_infinity ? monomial(R.inv(fr.tau), -fr.D)
                                 : add(R, monomial(fr.root, 0), monomial(fr.tau, fr.D));
  YPoly A;
  for (const auto& a : Fo.ycoeffs()) {
    LPoly acc;
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = add(R, mul(R, acc, X), monomial(fr.from_base.apply(c[i]), 0));
    A.push_back(std::move(acc));
  }
  YPoly res;
  for (std::size_t j = A.size(); j-- > 0;) {
    // res = res * (yshift + y) + A_j
    YPoly next(res.size() + 1);
    for (std::size_t i = 0; i < res.size(); ++i) {
      next[i] = add(R, next[i], mul(R, res[i], fr.yshift));
      next[i + 1] = add(R, next[i + 1], res[i]);
    }
    next[0] = add(R, next[0], A[j]);
    res = std::move(next);
  }
  while (!res.empty() && res.back().zero()) res.pop_back();
  return res;
}

FFPoly residual_of(const YPoly& G, const NPSegment& seg, const FieldPtr& field) {
  const int j0 = seg.points.front().index;
  const std::int64_t v0 = seg.points.front().valuation;
  const std::int64_t step = seg.slope.den;
  std::vector<Elem> c(static_cast<std::size_t>(seg.length / step) + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(j0) + i * static_cast<std::size_t>(step);
    const std::int64_t expo = v0 + static_cast<std::int64_t>(i) * seg.slope.num;
    if (j < G.size()) c[i] = G[j].at(expo);
  }
  return FFPoly(field, std::move(c));
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

BivarPoly orient(const BivarPoly& F, Side side) { return side == Side::X ? F : F.transposed(); }

class Engine {
 public:
  Engine(const BivarPoly& Fo, Workspace& ws) : Fo_(Fo), ws_(ws) {}

  Frame initial(const RatPlace& P) {
    const ResidueField rf = residue_field(P, ws_.fields);
    Frame fr;
    fr.field = rf.field;
    fr.from_base = rf.from_base;
    fr.root = rf.root;
    fr.at_infinity = P.is_infinite();
    return fr;
  }

  std::vector<Cluster> clusters(const Frame& fr) {
    const YPoly G = transform(Fo_, fr);
    std::vector<LatticePoint> pts;
    std::size_t j0 = 0;
    while (j0 < G.size() && G[j0].zero()) ++j0;
    require(j0 <= 1, ErrorCode::InvalidArgument, "repeated root of the fibre polynomial over the completion; F must be irreducible and separable");
    for (std::size_t j = j0; j < G.size(); ++j)
      pts.push_back({static_cast<int>(j), G[j].val()});

    std::vector<Cluster> out;
    int count = 0;
    if (j0 == 1) {
      out.push_back({Slope{1, 0}, FFPoly(fr.field), 1, true});
      ++count;
    }
    if (pts.size() >= 2) {
      for (const auto& seg : newton_polygon(pts)) {
        const Slope lambda = Slope::make(-seg.slope.num, seg.slope.den);
        if (fr.above && lambda.num <= *fr.above * lambda.den) continue;
        count += seg.length;
        const FFPoly res = residual_of(G, seg, fr.field);
        for (auto& fc : poly_factor(res, ws_.seed)) out.push_back({lambda, fc.poly, fc.multiplicity, false});
      }
    }
    require(fr.expected < 0 || count == fr.expected, ErrorCode::Internal,
            "cluster size mismatch: expected " + std::to_string(fr.expected) + ", found " +
                std::to_string(count));
    return out;
  }

  Frame refine(const Frame& fr, const Cluster& cl) {
    const FiniteField& R = *fr.field;
    const std::uint32_t p = R.characteristic();
    const std::int64_t h = cl.lambda.num;
    const std::int64_t e = cl.lambda.den;
    std::int64_t e0 = e, pA = 1;
    std::uint32_t A = 0;
    while (e0 % p == 0) {
      e0 /= p;
      pA *= p;
      ++A;
    }

    FieldPtr R2 = fr.field;
    Embedding emb = Embedding::identity(fr.field);
    Elem zeta = 0;
    if (cl.psi.degree() == 1) {
      zeta = R.neg(cl.psi.coeff(0));
    } else {
      R2 = ws_.fields.get(p, R.degree() * static_cast<std::uint32_t>(cl.psi.degree()));
      emb = make_embedding(fr.field, R2);
      zeta = roots_in_field(cl.psi.mapped(emb), ws_.seed).front();
    }
    const FiniteField& S = *R2;

    std::int64_t a = 0, b = 1;
    if (e0 != 1) {
      ext_gcd(h, e0, a, b);  // a*h + b*e0 = 1
    }
    const Elem zeta1 = S.frobenius_root(zeta, A);
    const Elem c = S.pow_signed(zeta1, b);
    const Elem kappa = S.pow_signed(zeta, -a);  // s_old = kappa * s^e

    Frame ch;
    ch.field = R2;
    ch.from_base = fr.from_base.then(emb);
    ch.root = emb.apply(fr.root);
    ch.at_infinity = fr.at_infinity;
    ch.tau = S.mul(emb.apply(fr.tau), S.pow_signed(kappa, fr.D));
    ch.D = fr.D * e;
    ch.yshift = add(S, substitute(S, map_lpoly(emb, fr.yshift), kappa, e), monomial(c, h));
    ch.e_tame = fr.e_tame * e0;
    ch.f_acc = fr.f_acc * cl.psi.degree();
    ch.depth = fr.depth + 1;
    ch.above = h;
    ch.expected = static_cast<int>(cl.mult * pA);
    ch.trail = fr.trail;
    ch.trail.push_back({"y -> y + " + format_monomial(S, c, h), cl.lambda, cl.psi.to_string("z"), cl.mult});
    return ch;
  }

 private:
  const BivarPoly& Fo_;
  Workspace& ws_;
};

std::int64_t local_valuation(const LocalPlace& lp, const BivarPoly& ho, Workspace& ws) {
  Engine eng(lp.Fo, ws);
  Frame fr = lp.frame;
  Cluster cl = lp.cluster;
  for (int guard = 0; guard < 64; ++guard) {
    const YPoly H = transform(ho, fr);
    require(!H.empty(), ErrorCode::InvalidArgument, "valuation of the zero function");
    if (cl.exact) {
      require(!H[0].zero(), ErrorCode::InvalidArgument, "function vanishes identically on the place");
      const std::int64_t num = lp.e * H[0].val();
      require(num % fr.D == 0, ErrorCode::Internal, "non-integral valuation");
      return num / fr.D;
    }
    const std::int64_t hh = cl.lambda.num, ee = cl.lambda.den;
    std::int64_t best = kInfiniteValuation;
    for (std::size_t j = 0; j < H.size(); ++j)
      if (!H[j].zero()) best = std::min(best, H[j].val() * ee + static_cast<std::int64_t>(j) * hh);
    std::vector<Elem> rc;
    std::int64_t jstar = -1;
    for (std::size_t j = 0; j < H.size(); ++j) {
      if (H[j].zero() || H[j].val() * ee + static_cast<std::int64_t>(j) * hh != best) continue;
      if (jstar < 0) jstar = static_cast<std::int64_t>(j);
      const std::size_t i = static_cast<std::size_t>((static_cast<std::int64_t>(j) - jstar) / ee);
      if (rc.size() <= i) rc.resize(i + 1, 0);
      rc[i] = H[j].at((best - static_cast<std::int64_t>(j) * hh) / ee);
    }
    const FFPoly RH(fr.field, rc);
    if (!(RH % cl.psi).is_zero()) {
      const std::int64_t num = lp.e * best;
      require(num % (ee * fr.D) == 0, ErrorCode::Internal, "non-integral valuation");
      return num / (ee * fr.D);
    }
    // leading terms cancel: follow the place one level deeper
    Frame child = eng.refine(fr, cl);
    const auto sub = eng.clusters(child);
    require(sub.size() == 1, ErrorCode::Internal, "place split under refinement");
    fr = std::move(child);
    cl = sub.front();
  }
  fail(ErrorCode::DepthExceeded, "valuation did not stabilize");
}

}  // namespace

bool PlaceExt::is_wild() const { return e % static_cast<int>(base.field()->characteristic()) == 0; }

std::vector<PlaceExt> places_above(const BivarPoly& F, const RatPlace& P, Side side, int max_depth) {
  Workspace ws;
  return places_above(F, P, side, max_depth, ws);
}

std::vector<PlaceExt> places_above(const BivarPoly& F, const RatPlace& P, Side side, int max_depth,
                                   Workspace& ws) {
  const BivarPoly Fo = orient(F, side);
  require(Fo.deg_y() >= 1, ErrorCode::InvalidArgument, "polynomial has degree 0 in the fibre variable");
  require(!Fo.derivative_y().is_zero(), ErrorCode::Inseparable,
          "F is inseparable in " + std::string(side == Side::X ? "y" : "x"));
  require(P.field()->same_as(*F.field()), ErrorCode::InvalidArgument, "place and polynomial over different fields");

  Engine eng(Fo, ws);
  std::vector<PlaceExt> out;
  std::function<void(const Frame&)> explore = [&](const Frame& fr) {
    for (const auto& cl : eng.clusters(fr)) {
      if (cl.exact || cl.mult == 1) {
        const int e = static_cast<int>(fr.e_tame * (cl.exact ? 1 : cl.lambda.den));
        const int f = static_cast<int>(fr.f_acc * (cl.exact ? 1 : cl.psi.degree()));
        auto lp = std::make_shared<LocalPlace>(LocalPlace{Fo, fr, cl, e, f});
        PlaceExt pl{P, side, fr.trail, lp->e, lp->f, 0, 0, std::nullopt, nullptr};
        pl.refinement.push_back({"", cl.exact ? Slope{1, 0} : cl.lambda,
                                 cl.exact ? std::string("exact root") : cl.psi.to_string("z"), 1});
        pl.local = std::move(lp);
        out.push_back(std::move(pl));
        continue;
      }
      require(fr.depth + 1 <= max_depth, ErrorCode::DepthExceeded,
              "refinement above " + P.to_string(to_string(side)) + " exceeded depth " + std::to_string(max_depth));
      explore(eng.refine(fr, cl));
    }
  };
  explore(eng.initial(P));

  int total = 0;
  for (const auto& pl : out) total += pl.e * pl.f;
  require(total == Fo.deg_y(), ErrorCode::Internal,
          "fundamental equality violated above " + P.to_string() + ": sum e*f = " + std::to_string(total));
  for (auto& pl : out) {
    const auto b = different_bounds(pl, F);
    pl.dmin = b.dmin;
    pl.dmax = b.dmax;
    pl.d_exact = b.exact;
  }
  return out;
}

std::int64_t valuation_at(const PlaceExt& pl, const BivarPoly& h) {
  require(pl.local != nullptr, ErrorCode::InvalidArgument, "place has no local data");
  Workspace ws;
  return local_valuation(*pl.local, orient(h, pl.side), ws);
}

DifferentBounds different_bounds(const PlaceExt& pl, const BivarPoly& F) {
  const int p = static_cast<int>(pl.base.field()->characteristic());
  if (pl.e % p != 0) return {pl.e - 1, pl.e - 1, pl.e - 1};

  const BivarPoly Fo = orient(F, pl.side);
  const int m = Fo.deg_y();
  const std::int64_t vm = valuation(Fo.ycoeff(static_cast<std::size_t>(m)), pl.base);
  // smallest N with z = t^N * a_m * y integral over the base valuation ring
  std::optional<std::int64_t> N;
  for (int j = 0; j < m; ++j) {
    const FFPoly a = Fo.ycoeff(static_cast<std::size_t>(j));
    if (a.is_zero()) continue;
    const std::int64_t num = -(valuation(a, pl.base) + (m - 1 - j) * vm);
    const std::int64_t den = m - j;
    const std::int64_t need = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    N = N ? std::max(*N, need) : need;
  }
  const BivarPoly fibre_derivative = pl.side == Side::X ? F.derivative_y() : F.derivative_x();
  const std::int64_t vd = valuation_at(pl, fibre_derivative);
  const std::int64_t dmax = pl.e * N.value_or(0) * (m - 1) + (m - 2) * pl.e * vm + vd;
  require(dmax >= pl.e, ErrorCode::Internal, "wild different upper bound below e");
  DifferentBounds b{pl.e, static_cast<int>(dmax), std::nullopt};
  if (b.dmin == b.dmax) b.exact = b.dmin;
  return b;
}

std::vector<LatticePoint> polygon_points(const BivarPoly& F, const RatPlace& P) {
  std::vector<LatticePoint> pts;
  for (int j = 0; j <= F.deg_y(); ++j) pts.push_back({j, valuation(F.ycoeff(static_cast<std::size_t>(j)), P)});
  return pts;
}

bool eisenstein_at(const BivarPoly& F, const RatPlace& P) {
  const int m = F.deg_y();
  if (m < 1 || F.ycoeff(0).is_zero()) return false;
  const auto segs = newton_polygon(polygon_points(F, P));
  return segs.size() == 1 && segs.front().length == m && segs.front().slope.den == m;
}

FFPoly segment_residual(const BivarPoly& F, const RatPlace& P, const NPSegment& seg, Workspace& ws) {
  Engine eng(F, ws);
  const Frame fr = eng.initial(P);
  return residual_of(transform(F, fr), seg, fr.field);
}

}  // namespace towerlab

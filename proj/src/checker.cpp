#include "towerlab/checker.hpp"

#include <algorithm>
#include <numeric>

#include "towerlab/irreducible.hpp"

namespace towerlab {

TowerSpec make_tower_spec(const BivarPoly& F) {
  TowerSpec ts{F, F.deg_y(), F.deg_x(), false};
  ts.non_skew = ts.m == ts.deg_x;
  return ts;
}

namespace {

std::string ef_list(const std::vector<PlaceExt>& pls) {
  std::string s = "[";
  for (std::size_t i = 0; i < pls.size(); ++i)
    s += (i ? ", " : "") + std::string("(e=") + std::to_string(pls[i].e) + ", f=" + std::to_string(pls[i].f) + ")";
  return s + "]";
}

}  // namespace

TheoremVerdict check_theorem(const BivarPoly& F, const FFPoly& f, int max_depth) {
  Workspace ws;
  return check_theorem(F, f, max_depth, ws);
}

TheoremVerdict check_theorem(const BivarPoly& F, const FFPoly& f, int max_depth, Workspace& ws) {
  const FieldPtr& K = F.field();
  require(f.field()->same_as(*K), ErrorCode::InvalidArgument, "f and F are over different fields");
  require(f.degree() >= 1 && f.is_monic() && is_irreducible(f), ErrorCode::InvalidArgument,
          "f must be monic irreducible: " + f.to_string("X"));

  TheoremVerdict v;
  auto add = [&v](std::string name, bool passed, std::string detail) {
    if (!passed) v.failed_conditions.push_back(name + ": " + detail);
    v.conditions.push_back({std::move(name), passed, std::move(detail)});
  };
  const TowerSpec ts = make_tower_spec(F);
  const int m = ts.m;
  const int p = static_cast<int>(K->characteristic());

  add("m >= 2", m >= 2, "deg_y F = " + std::to_string(m));
  if (m < 2) return v;
  add("non-skew", ts.non_skew, "deg_x F = " + std::to_string(ts.deg_x) + ", deg_y F = " + std::to_string(m));
  auto irreducible = [&](const BivarPoly& G, const std::string& over) {
    try {
      const auto r = irreducibility(G, ws);
      std::string detail = r.method;
      if (r.factor) detail += ", factor " + (over == "K(y)" ? r.factor->transposed() : *r.factor).to_string();
      add("irreducible over " + over, r.irreducible, detail);
      return r.irreducible;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Inconclusive) throw;
      add("irreducible over " + over, false, std::string("undecided: ") + e.what());
      return false;
    }
  };
  const bool irr_x = irreducible(F, "K(x)");
  const bool irr_y = irreducible(F.transposed(), "K(y)");
  if (!irr_x || !irr_y) return v;

  const RatPlace P = RatPlace::finite(f);
  const auto ys = places_above(F, P, Side::Y, max_depth, ws);
  const auto xs = places_above(F, P, Side::X, max_depth, ws);
  const BivarPoly fy = BivarPoly::from_y(f);
  const BivarPoly fx = BivarPoly::from_x(f);

  const bool tame_total = ys.size() == 1 && ys.front().e == m && std::gcd(m, p) == 1;
  add("(1) P_f(y) totally and tamely ramified", tame_total,
      "places above P_f(y): " + ef_list(ys) + ", m = " + std::to_string(m) + ", p = " + std::to_string(p));
  if (ys.size() == 1) v.q_over_fy = ys.front();

  if (tame_total) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (valuation_at(xs[i], fy) > 0) cand.push_back(i);
    require(cand.size() <= 1, ErrorCode::IdentificationFailed,
            std::to_string(cand.size()) + " places above P_f(x) are zeros of f(y)");
    if (cand.empty()) {
      add("Q above P_f(x)", false, "no place above P_f(x) is a zero of f(y)");
    } else {
      const PlaceExt& qx = xs[cand.front()];
      const PlaceExt& qy = ys.front();
      const std::int64_t ax = valuation_at(qx, fx), bx = valuation_at(qx, fy);
      const std::int64_t ay = valuation_at(qy, fx), by = valuation_at(qy, fy);
      require(ax == ay && bx == by, ErrorCode::IdentificationFailed,
              "valuations of (f(x), f(y)) disagree across sides: (" + std::to_string(ax) + ", " + std::to_string(bx) +
                  ") vs (" + std::to_string(ay) + ", " + std::to_string(by) + ")");
      add("Q above P_f(x)", true, "nu_Q(f(x)) = " + std::to_string(ax) + ", nu_Q(f(y)) = " + std::to_string(bx));
      v.q_over_fx = qx;
    }
  }

  if (v.q_over_fx) {
    const int n = v.q_over_fx->e;
    add("(2) gcd(e(Q|P_f(x)), m) = 1", std::gcd(n, m) == 1,
        "e(Q|P_f(x)) = " + std::to_string(n) + ", gcd = " + std::to_string(std::gcd(n, m)));
  } else {
    add("(2) gcd(e(Q|P_f(x)), m) = 1", false, "Q is not identified above P_f(x)");
  }

  for (const auto& pl : xs) {
    if (pl.e % p == 0 && std::gcd(pl.e, m) == 1) {
      v.q_prime = pl;
      break;
    }
  }
  add("(3) wild Q' above P_f(x) with gcd(e(Q'|P_f(x)), m) = 1", v.q_prime.has_value(),
      "places above P_f(x): " + ef_list(xs) + ", p = " + std::to_string(p));

  v.holds = v.failed_conditions.empty();
  if (v.holds) {
    RamHypotheses h{m, v.q_over_fx->e, v.q_prime->e, p, v.q_prime->dmin};
    require(hypothesis_violations(h).empty(), ErrorCode::Internal, "verified conditions give invalid hypotheses");
    v.hypotheses = h;
    v.conclusion = "InfiniteGenus";
  }
  return v;
}

std::vector<std::string> family_violations(const FamilyParams& params) {
  std::vector<std::string> out;
  require(params.field != nullptr, ErrorCode::InvalidParams, "family field not set");
  const FiniteField& K = *params.field;
  const std::uint64_t p = K.characteristic();
  std::uint64_t q = params.q;
  while (q > 1 && q % p == 0) q /= p;
  if (params.q < 2 || q != 1)
    out.push_back("q = " + std::to_string(params.q) + " is not a power of p = " + std::to_string(p));
  if (params.b == 0) out.push_back("b = 0 (need b != 0)");
  if (!params.g.field()->same_as(K)) {
    out.push_back("g is over a different field");
    return out;
  }
  const int m = params.m();
  const int dg = params.g.degree();
  if (params.g.is_zero()) out.push_back("g = 0");
  if (dg >= m) out.push_back("deg g = " + std::to_string(dg) + " >= m = " + std::to_string(m) + " (need deg g < m)");
  if (!params.g.is_zero() && params.g.eval(params.a) == 0) out.push_back("g(a) = 0 (need g(a) != 0)");
  if (dg >= 0 && dg < m && std::gcd(m - dg, m) != 1)
    out.push_back("gcd(m - deg g, m) = " + std::to_string(std::gcd(m - dg, m)) + " (need 1)");
  return out;
}

TowerSpec build_family(const FamilyParams& params) {
  const auto bad = family_violations(params);
  require(bad.empty(), ErrorCode::InvalidParams, bad.empty() ? "" : "invalid family parameters: " + bad.front());
  const FieldPtr& K = params.field;
  const unsigned m = static_cast<unsigned>(params.m());
  const BivarPoly ya = BivarPoly::y(K) - BivarPoly::constant(K, params.a);
  const BivarPoly xa = BivarPoly::x(K) - BivarPoly::constant(K, params.a);
  const BivarPoly F = BivarPoly::from_x(params.g) * (ya.pow(m) + ya.scaled(params.b)) - xa.pow(m);
  TowerSpec ts = make_tower_spec(F);
  require(ts.m == params.m() && ts.non_skew, ErrorCode::Internal, "family polynomial is not of bidegree (m, m)");
  return ts;
}

FamilyReport verify_family_facts(const FamilyParams& params, int max_depth) {
  Workspace ws;
  return verify_family_facts(params, max_depth, ws);
}

FamilyReport verify_family_facts(const FamilyParams& params, int max_depth, Workspace& ws) {
  FamilyReport rep{build_family(params), 0, {}, false, {}};
  const BivarPoly& F = rep.tower.F;
  const FieldPtr& K = params.field;
  const int m = params.m();
  const int q = static_cast<int>(params.q);
  const std::string c_gcd = "gcd(m - deg g, m) = 1";
  const std::string c_deg = "deg g < m";
  const std::string c_ga = "g(a) != 0";
  const std::string c_b = "b != 0";

  auto add = [&rep](std::string id, std::string desc, bool ok, std::string detail, std::vector<std::string> used) {
    rep.facts.push_back({std::move(id), std::move(desc), ok, std::move(detail), std::move(used)});
  };

  const RatPlace Pinf = RatPlace::infinity(K);
  const auto pts = polygon_points(F, Pinf);
  std::string poly_pts;
  for (const auto& pt : pts)
    if (pt.valuation != kInfiniteValuation)
      poly_pts += (poly_pts.empty() ? "" : " ") + std::string("(") + std::to_string(pt.index) + "," +
                  std::to_string(pt.valuation) + ")";
  add("a", "Eisenstein at P_inf", eisenstein_at(F, Pinf), "polygon points " + poly_pts, {c_deg, c_gcd});

  const FFPoly xa = FFPoly::linear(K, params.a);
  const RatPlace Pa = RatPlace::finite(xa);
  const auto xs = places_above(F, Pa, Side::X, max_depth, ws);
  std::vector<std::pair<int, int>> ef;
  for (const auto& pl : xs) ef.emplace_back(pl.e, pl.f);
  std::sort(ef.begin(), ef.end());
  const bool two = ef == std::vector<std::pair<int, int>>{{1, 1}, {q, 1}};
  add("b", "exactly two places above P_(x-a), (e, f) = (1, 1) and (q, 1)", two, "found " + ef_list(xs), {c_ga, c_b});

  const BivarPoly ya = BivarPoly::y(K) - BivarPoly::constant(K, params.a);
  const BivarPoly xab = BivarPoly::from_x(xa);
  const PlaceExt* Q = nullptr;
  for (const auto& pl : xs)
    if (pl.e == 1 && pl.f == 1) Q = &pl;
  std::int64_t nu_ya = 0;
  if (Q) nu_ya = valuation_at(*Q, ya);
  add("c", "the e = 1 place is a zero of y - a with nu_Q(y - a) = m", Q && nu_ya == m,
      Q ? "nu_Q(y - a) = " + std::to_string(nu_ya) + ", m = " + std::to_string(m) : "no place with e = 1",
      {c_ga, c_b});

  const RatPlace Pya = RatPlace::finite(xa);  // same polynomial, read in y
  const auto ys = places_above(F, Pya, Side::Y, max_depth, ws);
  bool d_ok = ys.size() == 1 && ys.front().e == m;
  std::string d_detail = "places above P_(y-a): " + ef_list(ys);
  if (d_ok) {
    const std::int64_t vx = valuation_at(ys.front(), xab);
    const std::int64_t vy = valuation_at(ys.front(), ya);
    d_detail += ", nu(x - a) = " + std::to_string(vx) + ", nu(y - a) = " + std::to_string(vy);
    d_ok = vx > 0 && (!Q || vy == nu_ya);
  }
  add("d", "e(Q|P_(y-a)) = m for the same place", d_ok, d_detail, {c_ga, c_b, c_deg});

  const std::int64_t vg = valuation(params.g, Pa);
  add("e", "nu_(P_(x-a))(g) = 0", vg == 0, "valuation " + std::to_string(vg), {c_ga});

  const FFElem c = qth_root(FFElem{K, params.b}, params.q);
  rep.c = c.value();
  const Elem cq = K->pow(c.value(), params.q);
  add("f", "c^q = b", cq == params.b, "c = " + K->format(c.value()) + ", c^q = " + K->format(cq), {});

  add("g", "non-skew: deg_x F = deg_y F = m", rep.tower.non_skew && rep.tower.m == m,
      "deg_x F = " + std::to_string(rep.tower.deg_x) + ", deg_y F = " + std::to_string(rep.tower.m), {c_deg});
  rep.notes.push_back("this family is sometimes described as skew, but deg_x F = deg_y F = m makes it non-skew");

  rep.all_passed = std::all_of(rep.facts.begin(), rep.facts.end(), [](const FactCheck& f) { return f.passed; });
  return rep;
}

}  // namespace towerlab

#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "support.hpp"
#include "towerlab/irreducible.hpp"
#include "towerlab/omfactor.hpp"

using namespace towerlab;
using namespace towerlab::test;

namespace {

std::vector<LatticePoint> finite_points(std::vector<LatticePoint> pts) {
  std::erase_if(pts, [](const LatticePoint& p) { return p.valuation == kInfiniteValuation; });
  return pts;
}

bool has_ef(const std::vector<PlaceExt>& pls, int e, int f) {
  return std::any_of(pls.begin(), pls.end(), [&](const PlaceExt& p) { return p.e == e && p.f == f; });
}

}  // namespace

TEST_SUITE("omfactor") {
  TEST_CASE("newton_polygon") {
    auto segs = newton_polygon(std::vector<LatticePoint>{{0, 3}, {1, 0}, {3, 0}});
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].slope == Slope::make(-3, 1));
    CHECK(segs[0].length == 1);
    CHECK(segs[1].slope == Slope::make(0, 1));
    CHECK(segs[1].length == 2);

    segs = newton_polygon(std::vector<LatticePoint>{{0, -2}, {1, 0}, {3, 0}});
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].slope == Slope::make(2, 3));
    CHECK(segs[0].length == 3);

    segs = newton_polygon(std::vector<LatticePoint>{{0, 0}, {1, 0}});
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].slope == Slope::make(0, 1));

    CHECK(error_code([] { newton_polygon(std::vector<LatticePoint>{{0, 1}}); }) == ErrorCode::DegeneratePolygon);
    CHECK(Slope::make(4, -6) == Slope::make(-2, 3));
  }

  TEST_CASE("polygon points of the q = 2 family") {
    const auto K = FiniteField::make(2, 1);
    const auto F = P(K, "(x+1)*(y^3+y)-x^3");
    const auto px = finite_points(polygon_points(F, RatPlace::finite(U(K, "x"))));
    REQUIRE(px.size() == 3);
    CHECK(px[0].index == 0);
    CHECK(px[0].valuation == 3);
    CHECK(px[1].valuation == 0);
    CHECK(px[2].index == 3);
    CHECK(px[2].valuation == 0);

    // at P_inf the heights are determined up to a common shift
    const auto pinf = finite_points(polygon_points(F, RatPlace::infinity(K)));
    REQUIRE(pinf.size() == 3);
    CHECK(pinf[1].valuation - pinf[0].valuation == 2);
    CHECK(pinf[2].valuation - pinf[0].valuation == 2);
    const auto segs = newton_polygon(pinf);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].slope == Slope::make(2, 3));
  }

  TEST_CASE("places_above: q = 2 family at P_x, with its refinement trace") {
    const auto K = FiniteField::make(2, 1);
    const auto F = P(K, "(x+1)*(y^3+y)-x^3");
    const auto pls = places_above(F, RatPlace::finite(U(K, "x")));
    REQUIRE(pls.size() == 2);
    const PlaceExt& Q = pls[0].e == 1 ? pls[0] : pls[1];
    const PlaceExt& Qp = pls[0].e == 1 ? pls[1] : pls[0];
    CHECK(Q.e == 1);
    CHECK(Q.f == 1);
    CHECK(valuation_at(Q, P(K, "y")) == 3);
    CHECK(Qp.e == 2);
    CHECK(Qp.f == 1);

    REQUIRE(Qp.refinement.size() == 2);
    CHECK(Qp.refinement[0].root_valuation == Slope::make(0, 1));
    CHECK(Qp.refinement[0].residual == "z + 1");
    CHECK(Qp.refinement[0].multiplicity == 2);
    CHECK(Qp.refinement[0].shift == "y -> y + 1");
    CHECK(Qp.refinement[1].root_valuation == Slope::make(3, 2));
    CHECK(valuation_at(Qp, P(K, "y+1")) == 3);

    // after y -> y + 1 the polynomial is (x+1)(y^3+y^2) - x^3 with polygon {(0,3),(2,0),(3,0)}
    const auto G = P(K, "(x+1)*(y^3+y^2)-x^3");
    const auto pts = finite_points(polygon_points(G, RatPlace::finite(U(K, "x"))));
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].index == 2);
    const auto segs = newton_polygon(pts);
    CHECK(segs[0].slope == Slope::make(-3, 2));
    CHECK(segs[0].length == 2);
  }

  TEST_CASE("places_above: q = 3 family and y - x") {
    const auto K3 = FiniteField::make(3, 1);
    const auto pls = places_above(P(K3, "(x+1)*(y^4+y)-x^4"), RatPlace::finite(U(K3, "x")));
    REQUIRE(pls.size() == 2);
    CHECK(has_ef(pls, 1, 1));
    CHECK(has_ef(pls, 3, 1));

    const auto K5 = FiniteField::make(5, 1);
    for (const auto& Pl : {RatPlace::finite(U(K5, "x")), RatPlace::finite(U(K5, "x^2+2")), RatPlace::infinity(K5)}) {
      const auto one = places_above(P(K5, "y-x"), Pl);
      REQUIRE(one.size() == 1);
      CHECK(one[0].e == 1);
      CHECK(one[0].f == 1);
    }
  }

  TEST_CASE("family fibres at x = a agree with a specialize-and-factor oracle") {
    // F(a, y) = g(a) (y - a)(y - a + c)^q: one simple root and one of multiplicity q
    for (const auto& [p, k, q, b] : std::vector<std::tuple<int, int, int, std::string>>{
             {2, 1, 2, "1"}, {3, 1, 3, "1"}, {2, 2, 4, "w"}, {5, 1, 5, "2"}}) {
      const auto K = FiniteField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
      const std::string m = std::to_string(q + 1);
      const auto F = P(K, "(x+1)*(y^" + m + "+(" + b + ")*y)-x^" + m);
      const auto fibre = poly_factor(F.eval_x(0));
      std::vector<int> mults;
      for (const auto& fc : fibre) mults.push_back(fc.multiplicity);
      std::sort(mults.begin(), mults.end());
      CHECK(mults == std::vector<int>{1, q});
      std::vector<int> es;
      for (const auto& pl : places_above(F, RatPlace::finite(U(K, "x")))) es.push_back(pl.e);
      std::sort(es.begin(), es.end());
      CHECK(es == mults);
    }
  }

  TEST_CASE("places_above on the y side") {
    const auto K = FiniteField::make(2, 1);
    const auto pls = places_above(P(K, "(x+1)*(y^3+y)-x^3"), RatPlace::finite(U(K, "x")), Side::Y);
    REQUIRE(pls.size() == 1);
    CHECK(pls[0].e == 3);
    CHECK(pls[0].f == 1);
    CHECK(valuation_at(pls[0], P(K, "x")) == 1);
    CHECK(valuation_at(pls[0], P(K, "y")) == 3);
  }

  TEST_CASE("residue field extensions") {
    // y^2 + y + x over GF(2) at P_x: F(0, y) = y(y + 1), split
    // y^2 + y + 1 + x: F(0, y) irreducible, one place with f = 2
    const auto K = FiniteField::make(2, 1);
    const auto pls = places_above(P(K, "y^2+y+1+x"), RatPlace::finite(U(K, "x")));
    REQUIRE(pls.size() == 1);
    CHECK(pls[0].f == 2);
    CHECK(pls[0].e == 1);
  }

  TEST_CASE("errors") {
    const auto K = FiniteField::make(2, 1);
    CHECK(error_code([&] { places_above(P(K, "y^2+x"), RatPlace::finite(U(K, "x"))); }) == ErrorCode::Inseparable);
  }

  TEST_CASE("different_bounds") {
    const auto K2 = FiniteField::make(2, 1);
    const auto F = P(K2, "(x+1)*(y^3+y)-x^3");
    const auto tame = places_above(F, RatPlace::finite(U(K2, "x+1")));
    REQUIRE(tame.size() == 1);
    CHECK(tame[0].e == 3);
    auto b = different_bounds(tame[0], F);
    CHECK(b.dmin == 2);
    CHECK(b.dmax == 2);
    CHECK(b.exact == 2);

    for (const auto& pl : places_above(F, RatPlace::finite(U(K2, "x")))) {
      b = different_bounds(pl, F);
      if (pl.e == 1) {
        CHECK(b.exact == 0);
      } else {
        CHECK(b.dmin == 2);
        CHECK(b.dmax == 6);
        CHECK_FALSE(b.exact.has_value());
        CHECK(valuation_at(pl, F.derivative_y()) == 6);
      }
    }
  }

  TEST_CASE("eisenstein_at") {
    const auto K2 = FiniteField::make(2, 1);
    CHECK(eisenstein_at(P(K2, "(x+1)*(y^3+y)-x^3"), RatPlace::infinity(K2)));
    CHECK_FALSE(eisenstein_at(P(K2, "(x+1)*(y^3+y)-x^3"), RatPlace::finite(U(K2, "x"))));
    const auto K5 = FiniteField::make(5, 1);
    CHECK(eisenstein_at(P(K5, "y^2-x"), RatPlace::finite(U(K5, "x"))));
    CHECK_FALSE(eisenstein_at(P(K5, "y^2-x^2"), RatPlace::finite(U(K5, "x"))));
  }

  TEST_CASE("is_irreducible_over_ratfield") {
    const auto K2 = FiniteField::make(2, 1);
    const auto K5 = FiniteField::make(5, 1);
    CHECK(is_irreducible_over_ratfield(P(K2, "(x+1)*(y^3+y)-x^3")));
    CHECK_FALSE(is_irreducible_over_ratfield(P(K5, "y^2-x^2")));
    CHECK(is_irreducible_over_ratfield(P(K2, "y^3-x")));
    CHECK(is_irreducible_over_ratfield(P(K5, "y^2-x^3-x")));
    CHECK_FALSE(is_irreducible_over_ratfield(P(K5, "(y^2+x)*(y+x^2+1)")));
    CHECK_FALSE(is_irreducible_over_ratfield(P(K2, "y^2+x^2")));  // a square in characteristic 2
    CHECK(is_irreducible_over_ratfield(P(K2, "y^2+x")));           // inseparable but irreducible

    // irreducible over GF(5) but splits over GF(25)
    Workspace ws;
    const auto F = P(K5, "y^2-2*x^2");
    CHECK(is_irreducible_over_ratfield(F, ws));
    CHECK_FALSE(is_absolutely_irreducible(F, ws));
    CHECK(is_absolutely_irreducible(P(K5, "y^2-x^3-x"), ws));
  }
}

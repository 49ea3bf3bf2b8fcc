#include <doctest.h>

#include "support.hpp"
#include "towerlab/poly.hpp"

using namespace towerlab;
using namespace towerlab::test;

TEST_SUITE("ffield") {
  TEST_CASE("make_field picks the smallest modulus") {
    const auto K2 = FiniteField::make(2, 1);
    CHECK(K2->size() == 2);
    CHECK(K2->modulus() == std::vector<std::uint32_t>{0, 1});

    const auto K4 = FiniteField::make(2, 2);
    CHECK(K4->size() == 4);
    CHECK(K4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // generator w satisfies w^2 = w + 1
    const Elem w = K4->generator();
    CHECK(K4->mul(w, w) == K4->add(w, 1));

    CHECK(error_code([] { FiniteField::make(4, 1); }) == ErrorCode::NotPrime);
  }

  TEST_CASE("arithmetic in GF(9)") {
    const auto K = FiniteField::make(3, 2);
    for (Elem a = 1; a < K->size(); ++a) {
      CHECK(K->mul(a, K->inv(a)) == 1);
      CHECK(K->pow(a, 8) == 1);
      for (Elem b = 0; b < K->size(); ++b) CHECK(K->mul(a, K->add(b, 1)) == K->add(K->mul(a, b), a));
    }
  }

  TEST_CASE("poly_factor") {
    const auto K2 = FiniteField::make(2, 1);
    auto f = poly_factor(U(K2, "x^3+x"));
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly == U(K2, "x"));
    CHECK(f[0].multiplicity == 1);
    CHECK(f[1].poly == U(K2, "x+1"));
    CHECK(f[1].multiplicity == 2);

    const auto K3 = FiniteField::make(3, 1);
    f = poly_factor(U(K3, "x^4+x"));
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly == U(K3, "x"));
    CHECK(f[1].poly == U(K3, "x+1"));
    CHECK(f[1].multiplicity == 3);

    const auto K5 = FiniteField::make(5, 1);
    f = poly_factor(U(K5, "x"));
    REQUIRE(f.size() == 1);
    CHECK(f[0].multiplicity == 1);

    const auto x3x = poly_factor(U(K5, "x^3+x"));
    REQUIRE(x3x.size() == 3);
    CHECK(x3x[0].poly == U(K5, "x"));
    CHECK(x3x[1].poly == U(K5, "x+2"));
    CHECK(x3x[2].poly == U(K5, "x+3"));
  }

  TEST_CASE("embed") {
    const auto K2 = FiniteField::make(2, 1);
    const auto K4 = FiniteField::make(2, 2);
    const auto K8 = FiniteField::make(2, 3);
    const auto K16 = FiniteField::make(2, 4);
    CHECK(embed(FFElem(K2, 1), K4).value() == 1);

    const FFElem g = embed(FFElem(K4, K4->generator()), K16);
    CHECK(g * g + g + FFElem(K16, 1) == FFElem(K16, 0));
    CHECK_FALSE(g.value() == 1);

    CHECK(error_code([&] { embed(FFElem(K4, 2), K8); }) == ErrorCode::NoEmbedding);
  }

  TEST_CASE("qth_root") {
    const auto K2 = FiniteField::make(2, 1);
    CHECK(qth_root(FFElem(K2, 1), 2).value() == 1);
    const auto K3 = FiniteField::make(3, 1);
    CHECK(qth_root(FFElem(K3, 2), 3).value() == 2);
    const auto K4 = FiniteField::make(2, 2);
    const FFElem w(K4, K4->generator());
    const FFElem c = qth_root(w, 2);
    CHECK(c == w.pow(2));
    CHECK(c.pow(2) == w);
    CHECK(qth_root(w, 4) == w);
  }

  TEST_CASE("gcd, derivative, irreducibility, roots") {
    const auto K = FiniteField::make(3, 1);
    CHECK(poly_gcd(U(K, "(x+1)^2*(x+2)"), U(K, "(x+1)*x")) == U(K, "x+1"));
    CHECK(poly_derivative(U(K, "x^3+2*x^2")) == U(K, "x"));
    CHECK(is_irreducible(U(K, "x^2+1")));
    CHECK_FALSE(is_irreducible(U(K, "x^2+2")));
    CHECK(roots_in_field(U(K, "x^2+2")) == std::vector<Elem>{1, 2});
    CHECK(monic_irreducibles(K, 2).size() == 3);
  }

  TEST_CASE("bivariate resultant and discriminant") {
    const auto K5 = FiniteField::make(5, 1);
    const auto F = P(K5, "y^2-x^3-x");
    const FFPoly d = discriminant_y(F);
    CHECK(d.degree() == 3);
    CHECK(d.monic() == U(K5, "x^3+x"));
    const auto K2 = FiniteField::make(2, 1);
    CHECK(resultant_y(P(K2, "y-x"), P(K2, "y")) == U(K2, "x"));
  }
}

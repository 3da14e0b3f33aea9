#include "doctest.h"
#include "dmod/errors.hpp"
#include "dmod/multiplier.hpp"
#include "helpers.hpp"

using namespace dmod;
using testing::poly;
using testing::polys;

TEST_SUITE("multiplier") {
  TEST_CASE("lct of small ideals") {
    auto R1 = testing::ring({"x"});
    CHECK(lct(polys(R1, {"x"})) == Rational(1));
    auto R = testing::ring({"x", "y"});
    CHECK(lct(polys(R, {"x^2+y^3"})) == Rational(5, 6));
    CHECK(lct(polys(R, {"x", "y"})) == Rational(2));
    CHECK(lct(polys(R, {"x^2", "y^3"})) == Rational(5, 6));
    CHECK(lct(polys(R, {"x^2", "x*y", "y^2"})) == Rational(1));
    CHECK(!lct(polys(R, {"x", "x+1"})).has_value());
    CHECK_THROWS_AS(lct(polys(R, {"0"})), PreconditionError);
  }

  TEST_CASE("redundant generators are dropped") {
    auto R = testing::ring({"x", "y"});
    MultiplierSession S(polys(R, {"x^2", "x*y", "y^2", "x^2+x*y", "x^3"}));
    CHECK(S.f().size() == 3);
    CHECK(S.lct() == Rational(1));
  }

  TEST_CASE("choice of m") {
    auto R = testing::ring({"x", "y"});
    MultiplierSession S(polys(R, {"x^2+y^3"}));
    CHECK(S.mFor(Rational(1, 2)) == 1);
    CHECK(S.mFor(Rational(11, 6)) == 2);  // c - lct = 1
    CHECK(S.mFor(Rational(2)) == 2);
    CHECK(S.mFor(Rational(17, 6)) == 3);
  }

  TEST_CASE("cusp multiplier ideals") {
    auto R = testing::ring({"x", "y"});
    MultiplierSession S(polys(R, {"x^2+y^3"}));
    CHECK(idealEquals(S.ideal(Rational(0)).generators, polys(R, {"1"})));
    CHECK(idealEquals(S.ideal(Rational(4, 5)).generators, polys(R, {"1"})));
    CHECK(idealEquals(S.ideal(Rational(5, 6)).generators, polys(R, {"x", "y"})));
    CHECK(idealEquals(S.ideal(Rational(99, 100)).generators, polys(R, {"x", "y"})));
    CHECK(idealEquals(S.ideal(Rational(1)).generators, polys(R, {"x^2+y^3"})));
    CHECK(idealEquals(S.ideal(Rational(11, 6)).generators, polys(R, {"x*(x^2+y^3)", "y*(x^2+y^3)"})));
  }

  TEST_CASE("annihilator, psi and elimination routes give the same J_f(m)") {
    auto R = testing::ring({"x", "y"});
    for (std::string f : {"x^2+y^3", "x*y"}) {
      CAPTURE(f);
      MultiplierSession a(polys(R, {f})), b(polys(R, {f}));
      MultiplierSession c(polys(R, {f}));
      a.setJRoute(MultiplierSession::JRoute::Psi);
      b.setJRoute(MultiplierSession::JRoute::Elimination);
      c.setJRoute(MultiplierSession::JRoute::Annihilator);
      for (unsigned m : {1u, 2u}) {
        CHECK(idealEquals(a.jIdeal(m), b.jIdeal(m)));
        CHECK(idealEquals(a.jIdeal(m), c.jIdeal(m)));
      }
    }
  }

  TEST_CASE("syzygy and linear-algebra routes agree") {
    auto R = testing::ring({"x", "y"});
    for (std::string f : {"x^2+y^3", "x*y", "x^2,y^3", "x^2,x*y,y^2"}) {
      CAPTURE(f);
      MultiplierSession S(polys(R, dmod::cli::splitList(f)));
      for (const auto& c : {Rational(0), Rational(1, 2), Rational(5, 6), Rational(1), Rational(3, 2)}) {
        CAPTURE(c);
        auto la = S.idealLA(c, 6u);
        auto syz = S.ideal(c).generators;
        // For one generator the search runs over J(f^c) : f^k = J(f^(c-k)), k = floor(c).
        auto searched = syz;
        if (S.f().size() == 1) {
          mpz_class k;
          mpz_fdiv_q(k.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
          searched = S.ideal(c - Rational(k)).generators;
        }
        CHECK(la.partial == (krullDimension(searched) > 0));
        CHECK(idealEquals(la.generators, syz));
      }
    }
  }

  TEST_CASE("linear algebra route flags a positive-dimensional ideal as partial") {
    auto R = testing::ring({"x", "y"});
    auto out = multiplierIdealLA(polys(R, {"x*y^2"}), Rational(1, 2), 3u);
    CHECK(out.partial);
    CHECK(idealEquals(out.generators, polys(R, {"y"})));
    auto principal = multiplierIdealLA(polys(R, {"x*y"}), Rational(1), 3u);
    CHECK_FALSE(principal.partial);
    CHECK(idealEquals(principal.generators, polys(R, {"x*y"})));
  }

  TEST_CASE("jumping coefficients") {
    auto R1 = testing::ring({"x"});
    auto j = jumpingCoefficients(polys(R1, {"x"}), Rational(0), Rational(2));
    CHECK(j.lct == Rational(1));
    CHECK(j.jumps == std::vector<Rational>{Rational(1), Rational(2)});
    REQUIRE(j.ideals.size() == 2);
    CHECK(idealEquals(j.ideals[0].generators, polys(R1, {"x"})));
    CHECK(j.ideals[0].to == Rational(2));
    CHECK(idealEquals(j.ideals[1].generators, polys(R1, {"x^2"})));

    auto R = testing::ring({"x", "y"});
    auto c = jumpingCoefficients(polys(R, {"x^2+y^3"}), Rational(0), Rational(1));
    CHECK(c.jumps == std::vector<Rational>{Rational(5, 6), Rational(1)});
    CHECK(c.rejected.empty());
    CHECK_THROWS_AS(jumpingCoefficients(polys(R, {"x"}), Rational(1), Rational(1)), PreconditionError);
  }
}

#include "doctest.h"
#include "dmod/bfunction.hpp"
#include "dmod/errors.hpp"
#include "local_helpers.hpp"

using namespace dmod;
using testing::poly;
using testing::polys;

namespace {

BPoly roots(std::vector<RootMultiplicity> r) { return BPoly::fromRoots(std::move(r)); }

const BPoly kCusp = BPoly::fromRoots({{-1, 1}, {Rational(-5, 6), 1}, {Rational(-7, 6), 1}});

}  // namespace

TEST_SUITE("local") {
  TEST_CASE("exceptionalLocusCore examples") {
    auto R = testing::ring({"x", "s"});
    auto b = roots({{-1, 1}});
    CHECK(isUnitIdeal(exceptionalLocusCore(polys(R, {"s+1"}), 1, b)));
    auto E = exceptionalLocusCore(polys(R, {"x*(s+1)"}), 1, b);
    CHECK(idealEquals(E, polys(R, {"x"})));
    CHECK(exceptionalLocusCore(polys(R, {"s"}), 1, b).empty());
  }

  TEST_CASE("exceptionalLocusCore with b = 1 is the elimination ideal") {
    auto R = testing::ring({"x", "y", "s"});
    auto E = exceptionalLocusCore(polys(R, {"x*s-y", "s^2-1"}), 2, BPoly());
    CHECK(idealEquals(E, polys(R, {"x^2-y^2"})));
  }

  TEST_CASE("exceptionalLocusB examples") {
    auto R = testing::ring({"x", "y"});
    CHECK(isUnitIdeal(exceptionalLocusB(poly(R, "x"), roots({{-1, 1}}))));
    auto cusp = poly(R, "x^2+y^3");
    auto E = exceptionalLocusB(cusp, roots({{-1, 1}}));
    REQUIRE(!E.empty());
    for (const auto& g : E) CHECK(inRadical(g, polys(R, {"x", "y"})));
    CHECK(inRadical(poly(R, "x"), E));
    CHECK(inRadical(poly(R, "y"), E));
    CHECK(isUnitIdeal(exceptionalLocusB(cusp, kCusp)));
  }

  TEST_CASE("E_b grows with b") {
    auto R = testing::ring({"x", "y"});
    LocalBData data(poly(R, "x^2+y^3"));
    auto small = data.exceptionalLocus(roots({{-1, 1}}));
    auto big = data.exceptionalLocus(roots({{-1, 1}, {Rational(-5, 6), 1}}));
    CHECK(idealContains(big, small));
    CHECK(data.global() == kCusp);
  }

  TEST_CASE("localBFunction examples") {
    auto R = testing::ring({"x", "y"});
    auto cusp = poly(R, "x^2+y^3");
    CHECK(localBFunction(cusp, polys(R, {"x", "y"})) == kCusp);
    CHECK(localBFunction(cusp, polys(R, {"x-1", "y+1"})) == roots({{-1, 1}}));
    // (1, 0) is not on the cusp.
    CHECK(localBFunction(cusp, polys(R, {"x-1", "y"})).isOne());
    CHECK(localBFunction(poly(R, "x"), polys(R, {"x"})) == roots({{-1, 1}}));
    CHECK(localBFunction(poly(R, "x"), polys(R, {"x", "y-3"})) == roots({{-1, 1}}));
    // Off the hypersurface the local b-function is 1.
    CHECK(localBFunction(cusp, polys(R, {"x-1", "y-1"})).isOne());
    CHECK(localBFunction(poly(R, "x*y"), polys(R, {"x", "y"})) == roots({{-1, 2}}));
    CHECK(localBFunction(poly(R, "x*y"), polys(R, {"x", "y-2"})) == roots({{-1, 1}}));
  }

  TEST_CASE("localBFunction rejects the unit ideal") {
    auto R = testing::ring({"x", "y"});
    CHECK_THROWS_AS(localBFunction(poly(R, "x"), polys(R, {"x", "x+1"})), PreconditionError);
    CHECK_THROWS_AS(localBFunction(poly(R, "3"), polys(R, {"x"})), PreconditionError);
  }

  TEST_CASE("stratify x") {
    auto R = testing::ring({"x"});
    auto st = stratifyByLocalB(poly(R, "x"));
    REQUIRE(st.strata.size() == 2);
    // b = 1 off V(x) and s + 1 on V(x).
    int seen = 0;
    for (const auto& s : st.strata) {
      if (s.b.isOne()) {
        CHECK(s.closure.empty());
        REQUIRE(s.excluded.size() == 1);
        CHECK(idealEquals(s.excluded[0], polys(R, {"x"})));
        ++seen;
      } else {
        CHECK(s.b == roots({{-1, 1}}));
        CHECK(idealEquals(s.closure, polys(R, {"x"})));
        ++seen;
      }
    }
    CHECK(seen == 2);
  }

  TEST_CASE("stratify is consistent with pointwise local b-functions") {
    auto R = testing::ring({"x", "y"});
    struct Case {
      std::string f;
      std::vector<BPoly> expected;
    };
    std::vector<Case> cases{
        {"x^2+y^3", {BPoly(), roots({{-1, 1}}), kCusp}},
        {"x*y", {BPoly(), roots({{-1, 1}}), roots({{-1, 2}})}},
    };
    for (const auto& c : cases) {
      CAPTURE(c.f);
      auto f = poly(R, c.f);
      LocalBData data(f);
      auto st = data.stratify();
      std::vector<BPoly> bs;
      for (const auto& s : st.strata) bs.push_back(s.b);
      CHECK(bs.size() == c.expected.size());
      for (const auto& e : c.expected) CHECK(std::find(bs.begin(), bs.end(), e) != bs.end());
      for (const auto& p : testing::grid(2, 1)) {
        int hits = 0;
        for (const auto& s : st.strata)
          if (testing::inStratum(s, p)) {
            ++hits;
            CHECK(data.localAt(testing::pointIdeal(R, p)) == s.b);
          }
        CHECK(hits == 1);
      }
    }
  }

  TEST_CASE("xy strata on the axes") {
    auto R = testing::ring({"x", "y"});
    auto st = stratifyByLocalB(poly(R, "x*y"));
    for (const auto& s : st.strata) {
      if (s.b == roots({{-1, 2}})) CHECK(idealEquals(s.closure, polys(R, {"x", "y"})));
      if (s.b == roots({{-1, 1}})) {
        CHECK(idealEquals(s.closure, polys(R, {"x*y"})));
        CHECK(testing::inStratum(s, {Rational(0), Rational(5)}));
        CHECK(testing::inStratum(s, {Rational(-3), Rational(0)}));
        CHECK(!testing::inStratum(s, {Rational(0), Rational(0)}));
      }
    }
  }
}

#include "doctest.h"
#include "dmod/bfunction.hpp"
#include "dmod/errors.hpp"
#include "weyl_helpers.hpp"

using namespace dmod;
using testing::poly;

namespace {

BPoly roots(std::vector<RootMultiplicity> r) { return BPoly::fromRoots(std::move(r)); }

}  // namespace

TEST_SUITE("bfunction") {
  TEST_CASE("linearAlgebraTrick examples") {
    auto base = testing::ring({"x"});
    WeylAlgebra D(base, 1);
    auto R = D.ring();
    auto one = poly(R, "1");
    CHECK(linearAlgebraTrick(one, {D.sigma() + one}, D.sigma()) == roots({{-1, 1}}));
    auto in = initialIdeal(buildIf(D, {poly(base, "x")}), D.tWeight());
    CHECK(linearAlgebraTrick(one, in, D.sigma()) == roots({{-1, 1}}));
    // g already in the ideal: b = 1.
    CHECK(linearAlgebraTrick(poly(R, "x"), {poly(R, "x")}, D.sigma()).isOne());
  }

  TEST_CASE("iteration cap reports partial data") {
    auto base = testing::ring({"x"});
    WeylAlgebra D(base, 1);
    Options opts;
    opts.iterationCap = 3;
    try {
      linearAlgebraTrick(poly(D.ring(), "1"), {poly(D.ring(), "dx")}, D.sigma(), opts);
      FAIL("expected IterationCapExceeded");
    } catch (const IterationCapExceeded& e) {
      CHECK(e.partial().size() == 4);
    }
  }

  TEST_CASE("global b-functions") {
    auto r1 = testing::ring({"x"});
    CHECK(globalBFunction(poly(r1, "x")) == roots({{-1, 1}}));
    auto r3 = testing::ring({"x", "y", "z"});
    CHECK(globalBFunction(poly(r3, "x^2+y^2+z^2")) == roots({{-1, 1}, {makeRational(-3, 2), 1}}));
    auto r2 = testing::ring({"x", "y"});
    auto cusp = roots({{-1, 1}, {makeRational(-5, 6), 1}, {makeRational(-7, 6), 1}});
    CHECK(globalBFunction(poly(r2, "x^2+y^3")) == cusp);
    CHECK(globalBFunction(poly(r2, "x^2+y^3")).toString() == "(s+5/6)(s+1)(s+7/6)");
    CHECK(globalBFunction(poly(r2, "x*y")) == roots({{-1, 2}}));
  }

  TEST_CASE("annihilator route") {
    auto r2 = testing::ring({"x", "y"});
    CHECK(globalBFunction(poly(r2, "x^2+y^3"), BMethod::Annihilator) ==
          globalBFunction(poly(r2, "x^2+y^3"), BMethod::InitialIdeal));
    CHECK(globalBFunction(poly(r2, "x*y"), BMethod::Annihilator) == roots({{-1, 2}}));
  }

  TEST_CASE("annFs examples") {
    auto r1 = testing::ring({"x"});
    auto ann = annFs(poly(r1, "x"));
    REQUIRE(ann.generators.size() == 1);
    CHECK(ann.generators[0].monic() == poly(ann.ring, "x*dx - s").monic());

    auto r2 = testing::ring({"x", "y"});
    auto annXY = annFs(poly(r2, "x*y"));
    CHECK(testing::weylMember(poly(annXY.ring, "x*dx - s"), annXY.generators));
    CHECK(testing::weylMember(poly(annXY.ring, "y*dy - s"), annXY.generators));
    CHECK_FALSE(testing::weylMember(poly(annXY.ring, "s + 1"), annXY.generators));
  }

  TEST_CASE("degenerate inputs") {
    auto r = testing::ring({"x"});
    CHECK_THROWS_AS(globalBFunction(poly(r, "0")), PreconditionError);
    std::vector<std::string> warnings;
    Options opts;
    opts.warn = [&](const std::string& w) { warnings.push_back(w); };
    CHECK(globalBFunction(poly(r, "3"), BMethod::InitialIdeal, opts).isOne());
    CHECK(warnings.size() == 1);
  }
}

#include "doctest.h"
#include "dmod/errors.hpp"
#include "helpers.hpp"

using namespace dmod;

namespace {

std::size_t errorPosition(const std::string& text, const std::vector<std::string>& vars) {
  try {
    cli::parse(text, vars);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("grammar examples") {
    auto r = testing::ring({"x", "y"});
    auto cusp = cli::parse("x^2 + y^3", {"x", "y"}).polynomials;
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].terms().size() == 2);
    CHECK(cusp[0] == testing::poly(r, "y^3+x^2"));
    auto saito = cli::parse("x^5 + y^4 + x^3*y^2", {"x", "y"}).polynomials[0];
    CHECK(saito.totalDegree() == 5);
    CHECK(saito.size() == 3);
    CHECK(cli::parse("  -x + 1/2 * ( y - 3 ) ", {"x", "y"}).polynomials[0] ==
          testing::poly(r, "1/2*y - x - 3/2"));
  }

  TEST_CASE("ideal lists") {
    auto in = cli::parse("x^2, x*(y+1), (x+y)^3", {"x", "y"});
    CHECK(in.polynomials.size() == 3);
    CHECK(in.variables == std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("errors carry positions") {
    CHECK(errorPosition("x^-1", {"x"}) == 2);
    CHECK(errorPosition("x + z", {"x", "y"}) == 4);
    CHECK(errorPosition("x + 1/", {"x"}) == 4);
    CHECK(errorPosition("2x", {"x"}) == 1);
    CHECK(errorPosition("x, y +", {"x", "y"}) == 6);
    CHECK(errorPosition("(x", {"x"}) == 2);
    CHECK_THROWS_AS(cli::parse("", {"x"}), ParseError);
  }

  TEST_CASE("variable declarations") {
    CHECK_THROWS_AS(cli::polynomialRing({"x", "x"}), PreconditionError);
    CHECK_THROWS_AS(cli::polynomialRing({"1x"}), PreconditionError);
    CHECK(cli::splitList(" x, y ,z") == std::vector<std::string>{"x", "y", "z"});
  }
}

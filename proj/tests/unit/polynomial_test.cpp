#include "doctest.h"
#include "dmod/errors.hpp"
#include "helpers.hpp"

using namespace dmod;
using testing::poly;

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic normalizes terms") {
    auto r = testing::ring({"x", "y"});
    auto p = poly(r, "x^2 + 2*x*y + y^2");
    CHECK(poly(r, "(x+y)^2") == p);
    CHECK((p - p).isZero());
    CHECK(poly(r, "(x+y)*(x-y)") == poly(r, "x^2-y^2"));
    CHECK(poly(r, "1/2*x + 1/2*x") == poly(r, "x"));
    CHECK(p.totalDegree() == 2);
    CHECK(poly(r, "0").totalDegree() == -1);
  }

  TEST_CASE("degrevlex leading terms") {
    auto r = testing::ring({"x", "y", "z"});
    CHECK(poly(r, "x*z + y^2").leadMonomial() == poly(r, "y^2").leadMonomial());
    CHECK(poly(r, "x + y^2").leadMonomial() == poly(r, "y^2").leadMonomial());
    auto lexRing = r->withOrder(MonomialOrder::lex());
    CHECK(poly(r, "x + y^2").reordered(lexRing).leadMonomial() == poly(r, "x").leadMonomial());
  }

  TEST_CASE("printing") {
    auto r = testing::ring({"x", "y"});
    CHECK(poly(r, "x^2 - 3/2*x*y + 1").toString() == "x^2 - 3/2*x*y + 1");
    CHECK(poly(r, "-y").toString() == "-y");
    CHECK(poly(r, "0").toString() == "0");
  }

  TEST_CASE("derivative and substitution") {
    auto r = testing::ring({"x", "y"});
    auto f = poly(r, "x^2 + y^3");
    CHECK(f.derivative(0) == poly(r, "2*x"));
    CHECK(f.derivative(1) == poly(r, "3*y^2"));
    CHECK(f.substitute(1, 2) == poly(r, "x^2 + 8"));
  }

  TEST_CASE("mixed rings are rejected") {
    auto a = testing::ring({"x", "y"});
    auto b = testing::ring({"x", "z"});
    CHECK_THROWS_AS(poly(a, "x") + poly(b, "x"), RingMismatch);
  }
}

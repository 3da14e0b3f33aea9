#include "doctest.h"
#include "dmod/commutative.hpp"
#include "dmod/weyl.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "weyl_helpers.hpp"

using namespace dmod;

namespace {

constexpr int kSamples = 40;

std::vector<Polynomial> randomIdeal(testing::Generator& gen, const RingPtr& ring, unsigned count, unsigned degree,
                                    unsigned terms) {
  std::vector<Polynomial> out;
  for (unsigned k = 0; k < count; ++k) out.push_back(gen.polynomial(ring, degree, terms));
  return out;
}

RingPtr weylRing(std::size_t n) {
  std::vector<std::string> names;
  std::vector<WeylPair> pairs;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("dx" + std::to_string(i));
    pairs.push_back({i, n + i});
  }
  return makeRing(std::move(names), MonomialOrder::degrevlex(), std::move(pairs));
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("commutative S-pairs reduce to zero") {
    testing::Generator gen(11);
    auto r = testing::ring({"x", "y", "z"});
    for (int k = 0; k < kSamples; ++k) {
      auto F = randomIdeal(gen, r, unsigned(gen.integer(1, 3)), 3, 3);
      CAPTURE(formatList(F));
      auto G = gb(F);
      CHECK(testing::isGroebnerBasis(G));
      for (const auto& f : F) CHECK(nf(f, G).isZero());
    }
  }

  TEST_CASE("lex and elimination orders") {
    testing::Generator gen(12);
    auto r = testing::ring({"x", "y", "z"});
    for (int k = 0; k < kSamples / 2; ++k) {
      auto F = randomIdeal(gen, r, 2, 2, 3);
      CAPTURE(formatList(F));
      auto G = gb(F, MonomialOrder::lex());
      CHECK(testing::isGroebnerBasis(G));
      CHECK(idealEquals(G, F));
    }
  }

  TEST_CASE("Weyl S-pairs reduce to zero") {
    testing::Generator gen(13);
    auto r = weylRing(2);
    for (int k = 0; k < kSamples / 2; ++k) {
      auto F = randomIdeal(gen, r, 2, 2, 2);
      CAPTURE(formatList(F));
      auto G = weylGB(F);
      CHECK(testing::isGroebnerBasis(G));
      for (const auto& f : F) CHECK(nf(f.reordered(G.front().ring()), G).isZero());
    }
  }
}

TEST_SUITE("nf") {
  TEST_CASE("idempotent and differs by an ideal element") {
    testing::Generator gen(21);
    auto r = testing::ring({"x", "y", "z"});
    for (int k = 0; k < kSamples; ++k) {
      auto G = gb(randomIdeal(gen, r, 2, 3, 3));
      auto p = gen.polynomial(r, 4, 5);
      CAPTURE(formatList(G));
      CAPTURE(p);
      auto q = nf(p, G);
      CHECK(nf(q, G) == q);
      CHECK(nf(p - q, G).isZero());
      for (const auto& t : q.terms())
        for (const auto& g : G) CHECK_FALSE(divides(g.leadMonomial(), t.mono, r->size()));
    }
  }

  TEST_CASE("linear and blind to ideal multiples") {
    testing::Generator gen(22);
    auto r = testing::ring({"x", "y"});
    for (int k = 0; k < kSamples; ++k) {
      auto F = randomIdeal(gen, r, 2, 3, 3);
      auto G = gb(F);
      auto p = gen.polynomial(r, 4, 4), q = gen.polynomial(r, 4, 4);
      Polynomial h = p;
      for (const auto& f : F) h += gen.polynomial(r, 2, 2) * f;
      CAPTURE(formatList(F));
      CHECK(nf(h, G) == nf(p, G));
      CHECK(nf(p + q, G) == nf(p, G) + nf(q, G));
      CHECK(nf(Rational(3, 2) * p, G) == Rational(3, 2) * nf(p, G));
    }
  }

  TEST_CASE("Weyl normal forms") {
    testing::Generator gen(23);
    auto r = weylRing(1);
    for (int k = 0; k < kSamples; ++k) {
      auto F = randomIdeal(gen, r, 2, 2, 2);
      auto G = weylGB(F);
      if (G.empty()) continue;
      auto ring = G.front().ring();
      auto p = gen.polynomial(ring, 3, 3);
      auto q = nf(p, G);
      CHECK(nf(q, G) == q);
      Polynomial h = p;
      for (const auto& f : F) h += gen.polynomial(ring, 1, 2) * f.reordered(ring);
      CHECK(nf(h, G) == q);
    }
  }
}

TEST_SUITE("syzygy") {
  TEST_CASE("syzygies annihilate the generators") {
    testing::Generator gen(31);
    auto r = testing::ring({"x", "y"});
    for (int k = 0; k < kSamples / 2; ++k) {
      const std::size_t count = std::size_t(gen.integer(2, 4)), width = std::size_t(gen.integer(1, 2));
      std::vector<FreeModuleVector> vectors(count);
      for (auto& v : vectors)
        for (std::size_t c = 0; c < width; ++c) v.components.push_back(gen.polynomial(r, 2, 2));
      for (const auto& s : syzygies(vectors)) {
        REQUIRE(s.components.size() == count);
        for (std::size_t c = 0; c < width; ++c) {
          Polynomial sum(r);
          for (std::size_t i = 0; i < count; ++i) sum += s.components[i] * vectors[i].components[c];
          CHECK(sum.isZero());
        }
      }
    }
  }

  TEST_CASE("Koszul relations lie in the syzygy module") {
    testing::Generator gen(32);
    auto r = testing::ring({"x", "y", "z"});
    for (int k = 0; k < kSamples / 2; ++k) {
      auto a = gen.polynomial(r, 2, 2), b = gen.polynomial(r, 2, 2);
      if (a.isZero() || b.isZero()) continue;
      auto syz = syzygies({{{a}}, {{b}}});
      // (b, -a) is a syzygy, so b lies in the ideal of first coordinates.
      std::vector<Polynomial> firsts;
      for (const auto& s : syz) firsts.push_back(s.components[0]);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(isMember(b, firsts));
    }
  }

  TEST_CASE("last-coordinate syzygies multiply w into the span") {
    testing::Generator gen(33);
    auto r = testing::ring({"x", "y"});
    for (int k = 0; k < kSamples / 2; ++k) {
      std::vector<FreeModuleVector> vectors(2);
      for (auto& v : vectors) v.components = {gen.polynomial(r, 2, 2), gen.polynomial(r, 2, 2)};
      FreeModuleVector w{{gen.polynomial(r, 2, 2), gen.polynomial(r, 2, 2)}};
      auto qs = syzygyLastCoordinate(vectors, w);
      // q*w lies in the span of the v_i exactly when 1 is a last coordinate for (v, q*w).
      for (const auto& q : qs) {
        FreeModuleVector qw{{q * w.components[0], q * w.components[1]}};
        auto unit = syzygyLastCoordinate(vectors, qw);
        CHECK(isUnitIdeal(unit));
      }
    }
  }
}

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dmod/polynomial.hpp"

namespace testing {

/// Small random polynomials with fixed seeds so failures reproduce.
class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  dmod::Rational coefficient() {
    int c = 0;
    while (c == 0) c = integer(-3, 3);
    dmod::Rational q(c, integer(1, 2));
    q.canonicalize();
    return q;
  }

  /// Sum of up to `terms` monomials of total degree <= maxDegree (may cancel to zero).
  dmod::Polynomial polynomial(const dmod::RingPtr& ring, unsigned maxDegree, unsigned terms,
                              const std::vector<std::size_t>& vars) {
    dmod::Polynomial p(ring);
    for (unsigned k = 0; k < terms; ++k) {
      dmod::Monomial m;
      unsigned budget = unsigned(integer(0, int(maxDegree)));
      for (unsigned d = 0; d < budget; ++d) ++m.exp[vars[std::size_t(integer(0, int(vars.size()) - 1))]];
      m.recompute();
      p += dmod::Polynomial::monomial(ring, m, coefficient());
    }
    return p;
  }

  dmod::Polynomial polynomial(const dmod::RingPtr& ring, unsigned maxDegree, unsigned terms) {
    std::vector<std::size_t> vars(ring->size());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    return polynomial(ring, maxDegree, terms, vars);
  }

  /// Nonconstant polynomial with f(0) = 0.
  dmod::Polynomial singular(const dmod::RingPtr& ring, unsigned maxDegree, unsigned terms) {
    for (;;) {
      auto p = polynomial(ring, maxDegree, terms);
      dmod::Polynomial q(ring);
      for (const auto& t : p.terms())
        if (t.mono.degree > 0) q += dmod::Polynomial::monomial(ring, t.mono, t.coef);
      if (!q.isZero()) return q;
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing

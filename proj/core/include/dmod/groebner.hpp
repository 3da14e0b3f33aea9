#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmod/monomial.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/rational.hpp"
#include "dmod/ring.hpp"

// Integer-coefficient Buchberger engine shared by the commutative and Weyl
// layers. Polynomials here are scaled to primitive integer representatives;
// ideal computations only care about them up to units, normal forms track the
// scale explicitly.
namespace dmod::engine {

struct ITerm {
  Monomial mono;
  BigInt coef;
};

/// Terms in strictly decreasing order. Module elements use Monomial::component.
using IPoly = std::vector<ITerm>;

struct GBOptions {
  /// Drop the tail-reduction of S-polynomial remainders (leading reduction only).
  bool tailReduce = true;
  /// Return a reduced basis (minimal, tail-reduced, primitive, sorted ascending).
  bool reduced = true;
  /// Abort with IterationCapExceeded after this many S-pair reductions (0 = unlimited).
  std::size_t maxReductions = 0;
  /// Called with short progress lines when set.
  std::function<void(const std::string&)> trace;
};

struct GBStats {
  std::size_t pairsConsidered = 0;
  std::size_t pairsReduced = 0;
  std::size_t zeroReductions = 0;
  std::size_t basisSize = 0;
  double elapsedMs = 0;
};

/// p scaled by the positive rational `scale` such that the result is a primitive
/// integer polynomial: result = scale * p.
IPoly toIntegral(const Polynomial& p, Rational* scale = nullptr);
Polynomial toPolynomial(const RingPtr& ring, const IPoly& p, const Rational& divisor = 1);

IPoly leftMultiply(const Ring& ring, const Monomial& m, const IPoly& p);
/// a*p - b*q; both inputs sorted.
IPoly combine(const Ring& ring, const BigInt& a, std::span<const ITerm> p, const BigInt& b,
              std::span<const ITerm> q);
BigInt content(std::span<const ITerm> p);
/// Divides by the content and makes the leading coefficient positive; returns the divisor (signed).
BigInt makePrimitive(IPoly& p);
bool isHomogeneous(const IPoly& p);
unsigned maxDegree(const IPoly& p);

/// Reducer set with leading-monomial lookup.
class ReducerSet {
 public:
  explicit ReducerSet(const Ring& ring) : ring_(&ring) {}
  void add(const IPoly* p);
  /// Index of a reducer whose leading monomial divides m (shortest one), if any.
  std::optional<std::size_t> find(const Monomial& m) const;
  const IPoly& operator[](std::size_t i) const { return *polys_[i]; }
  std::size_t size() const { return polys_.size(); }

 private:
  const Ring* ring_;
  std::vector<const IPoly*> polys_;
  std::vector<Monomial> leads_;
};

/// Reduces p modulo the reducers. On return `multiplier` holds the integer c
/// with result = c*p - (ideal element) before the final content division,
/// and `divisor` the content removed; i.e. result = (multiplier/divisor) * p mod I.
IPoly reduce(const Ring& ring, IPoly p, const ReducerSet& reducers, bool full, Rational* scale = nullptr);

/// Left Gröbner basis. The order must be global unless every generator is
/// homogeneous for the standard grading (total degree).
std::vector<IPoly> buchberger(const Ring& ring, std::vector<IPoly> gens, const GBOptions& options = {},
                              GBStats* stats = nullptr);

/// Interreduce a Gröbner basis: minimal, tail-reduced, primitive, sorted by increasing leading monomial.
std::vector<IPoly> reduceBasis(const Ring& ring, std::vector<IPoly> basis);

}  // namespace dmod::engine

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmod/monomial.hpp"
#include "dmod/rational.hpp"
#include "dmod/ring.hpp"

namespace dmod {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Immutable sparse polynomial over Q in a Ring. Terms are kept in strictly
/// decreasing order under the ring's monomial order and never carry a zero
/// coefficient. In a Weyl algebra the same type holds normally ordered
/// operators and operator* is the noncommutative product.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes terms in any order; sorts, merges duplicates and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  const Monomial& leadMonomial() const { return terms_.front().mono; }
  const Rational& leadCoefficient() const { return terms_.front().coef; }
  const Term& leadTerm() const { return terms_.front(); }

  /// Total degree of the highest-degree term (-1 for zero).
  long totalDegree() const;
  long degreeIn(std::size_t var) const;
  bool involves(std::size_t var) const;
  bool isHomogeneous() const;

  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  /// Ring product (normally ordered in a Weyl algebra).
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  Polynomial pow(unsigned e) const;
  /// Left multiplication by a monomial.
  Polynomial leftMultiply(const Monomial& m, const Rational& c = 1) const;
  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;
  /// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Commutative partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const;
  /// Leading form with respect to an integer weight on the variables: the sum
  /// of the terms of maximal weight.
  Polynomial topWeightForm(const std::vector<int>& weight) const;

  /// Re-express in another ring. `varMap[i]` is the target index of source
  /// variable i, or -1 if that variable must not occur.
  Polynomial mapTo(const RingPtr& target, const std::vector<int>& varMap) const;
  /// Same variables, possibly different order.
  Polynomial reordered(const RingPtr& target) const;
  /// Substitute a constant for one variable; the result stays in the same ring.
  Polynomial substitute(std::size_t var, const Rational& value) const;

  /// Coefficient of a given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  std::string toString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

using WeylElement = Polynomial;

/// Throws RingMismatch unless both polynomials live in the same algebra with the same order.
void requireSameRing(const Polynomial& a, const Polynomial& b, const char* what);
void requireSameRing(const std::vector<Polynomial>& ps, const char* what);

std::string toString(const Monomial& m, const Ring& ring);
std::string formatList(const std::vector<Polynomial>& ps);

}  // namespace dmod

#pragma once

#include <string>
#include <vector>

#include "dmod/polynomial.hpp"
#include "dmod/rational.hpp"

namespace dmod {

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity = 1;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRootResult {
  /// Sorted by increasing |root|, ties by value.
  std::vector<RootMultiplicity> roots;
  /// Monic factor without rational roots, coefficients ascending ({1} when fully split).
  std::vector<Rational> residual;
};

/// Rational roots of a nonzero polynomial given by ascending coefficients.
RationalRootResult rationalRoots(const std::vector<Rational>& coefficients);
/// Same for a polynomial in a single variable (all other variables must be absent).
RationalRootResult rationalRoots(const Polynomial& p, std::size_t var);

/// Monic univariate polynomial in s that splits over Q, stored both expanded
/// and as a root list.
class BPoly {
 public:
  /// The constant polynomial 1.
  BPoly();
  /// Throws NotABFunction when the polynomial has a non-linear irreducible factor.
  static BPoly fromCoefficients(std::vector<Rational> ascending);
  static BPoly fromRoots(std::vector<RootMultiplicity> roots);

  /// Ascending, monic.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const std::vector<RootMultiplicity>& roots() const { return roots_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool isOne() const { return coeffs_.size() == 1; }
  unsigned multiplicity(const Rational& root) const;

  Rational evaluate(const Rational& s) const;
  bool divides(const BPoly& other) const;
  /// Divides out (s - root) once; the root must be present.
  BPoly withoutRoot(const Rational& root) const;
  /// Product of the factors (s - root)^mult whose root satisfies the predicate.
  template <class Pred>
  BPoly filtered(Pred keep) const {
    std::vector<RootMultiplicity> kept;
    for (const auto& r : roots_)
      if (keep(r.root)) kept.push_back(r);
    return fromRoots(std::move(kept));
  }
  /// Roots of b(-s), i.e. the negated roots, ascending.
  std::vector<Rational> negatedRoots() const;

  /// Factored form, e.g. "(s+1)(s+5/6)^2"; "1" for the constant.
  std::string toString() const;
  /// Expanded form, e.g. "s^2+11/6*s+5/6".
  std::string expandedString() const;

  friend bool operator==(const BPoly& a, const BPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

 private:
  std::vector<Rational> coeffs_;
  std::vector<RootMultiplicity> roots_;
};

}  // namespace dmod

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dmod/monomial.hpp"
#include "dmod/monomial_order.hpp"
#include "dmod/rational.hpp"

namespace dmod {

/// A pair (coordinate, derivation) satisfying d*x = x*d + 1, or
/// d*x = x*d + H^2 when the ring carries a Weyl homogenizing variable H.
struct WeylPair {
  std::size_t coordinate;
  std::size_t derivation;
  friend bool operator==(const WeylPair&, const WeylPair&) = default;
};

/// Variables, multiplication rule and monomial order of a polynomial ring
/// or (homogenized) Weyl algebra. Rings are immutable and shared.
/// Monomials are stored normally ordered: every coordinate sits to the
/// left of every derivation; all other variables are central.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order, std::vector<WeylPair> pairs = {},
       std::optional<std::size_t> homogenizer = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> indexOf(const std::string& name) const;

  const MonomialOrder& order() const { return order_; }
  const std::vector<WeylPair>& weylPairs() const { return pairs_; }
  std::optional<std::size_t> homogenizer() const { return homogenizer_; }
  bool isCommutative() const { return pairs_.empty(); }

  /// For a derivation index, its coordinate; for a coordinate, its derivation.
  std::optional<std::size_t> partner(std::size_t var) const;
  bool isDerivation(std::size_t var) const;

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, names_.size()); }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same variables and multiplication, different order.
  std::shared_ptr<const Ring> withOrder(MonomialOrder order) const;

  /// Normally ordered product of two monomials: calls `emit(mono, coeff)` for
  /// every term; the commutative product is always emitted first with coefficient 1.
  template <class Emit>
  void multiply(const Monomial& a, const Monomial& b, Emit&& emit) const;

  /// True iff a*b has correction terms (some derivation of a meets its coordinate in b).
  bool needsReordering(const Monomial& a, const Monomial& b) const;

  bool sameAlgebra(const Ring& other) const;
  friend bool operator==(const Ring& a, const Ring& b) { return a.sameAlgebra(b) && a.order_ == b.order_; }

  std::string describe() const;

 private:
  void expandCorrections(const Monomial& a, const Monomial& b,
                         const std::function<void(const Monomial&, const BigInt&)>& emit) const;

  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<WeylPair> pairs_;
  std::optional<std::size_t> homogenizer_;
  std::vector<int> partner_;
  std::vector<bool> isDerivation_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr makeRing(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex(),
                 std::vector<WeylPair> pairs = {}, std::optional<std::size_t> homogenizer = std::nullopt);

template <class Emit>
void Ring::multiply(const Monomial& a, const Monomial& b, Emit&& emit) const {
  emit(a * b, BigInt(1));
  if (!needsReordering(a, b)) return;
  expandCorrections(a, b, [&](const Monomial& m, const BigInt& c) { emit(m, c); });
}

}  // namespace dmod

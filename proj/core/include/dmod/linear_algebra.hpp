#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "dmod/groebner.hpp"
#include "dmod/polynomial.hpp"

namespace dmod {

/// Incremental fraction-free Gaussian elimination on sparse vectors indexed
/// by monomials. Vectors are added one at a time; a vector that depends on the
/// previously accepted ones is rejected and the dependency is returned.
class DependencyFinder {
 public:
  explicit DependencyFinder(RingPtr ring) : ring_(std::move(ring)) {}

  /// If v = sum_j c_j v_j over the accepted vectors v_j, returns the
  /// coefficients (c_0, ..., c_{k-1}) with v - sum c_j v_j = 0. Otherwise accepts v
  /// and returns nullopt.
  std::optional<std::vector<Rational>> add(const Polynomial& v);

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    engine::IPoly vec;
    std::vector<BigInt> comb;  // vec = sum comb[j] * original_j
  };
  RingPtr ring_;
  std::vector<Row> rows_;
  std::vector<Rational> scales_;  // accepted vector j enters as scales_[j] * v_j
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivots_;
};

}  // namespace dmod

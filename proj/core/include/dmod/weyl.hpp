#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dmod/groebner.hpp"
#include "dmod/monomial_order.hpp"
#include "dmod/polynomial.hpp"

namespace dmod {

/// D_Y = K<x_1..x_n, t_1..t_r, dx_1..dx_n, dt_1..dt_r> built over a commutative
/// ring K[x], optionally with extra central variables appended (s, h, u, ...).
///
/// Variable layout: x block, t block, dx block, dt block, then the extras.
/// Derivation names are "d" + coordinate name.
class WeylAlgebra {
 public:
  /// `base` is the commutative ring K[x]; `r` is the number of t variables.
  WeylAlgebra(RingPtr base, std::size_t r, std::vector<std::string> extras = {});

  const RingPtr& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t x(std::size_t i) const { return i; }
  std::size_t t(std::size_t j) const { return n_ + j; }
  std::size_t dx(std::size_t i) const { return n_ + r_ + i; }
  std::size_t dt(std::size_t j) const { return 2 * n_ + r_ + j; }
  std::size_t extra(std::size_t k) const { return 2 * (n_ + r_) + k; }
  std::size_t extraCount() const { return ring_->size() - 2 * (n_ + r_); }

  /// Same algebra with more central variables appended after the existing ones.
  WeylAlgebra withExtras(const std::vector<std::string>& more) const;

  /// The (-w,w) weight with w = (0,...,0,1,...,1): t_j -> -1, dt_j -> +1, all else 0.
  std::vector<int> tWeight() const;
  /// sigma = -sum_j dt_j t_j = -sum_j (t_j dt_j + 1).
  Polynomial sigma() const;

  /// K[x] -> D_Y.
  Polynomial embed(const Polynomial& p) const;
  Polynomial variable(std::size_t index) const { return Polynomial::variable(ring_, index); }

  /// Variable map from ring() into another WeylAlgebra over the same base and r
  /// whose extras extend ours.
  std::vector<int> mapInto(const WeylAlgebra& larger) const;

 private:
  RingPtr base_;
  RingPtr ring_;
  std::size_t n_, r_;
};

/// The n + r generators of I_f in D_Y for f = (f_1..f_r) in K[x].
std::vector<Polynomial> buildIf(const WeylAlgebra& D, const std::vector<Polynomial>& f);

/// Left Gröbner basis in a Weyl algebra (possibly with central variables).
/// The computation runs in the homogenized algebra (d*x = x*d + H^2) under
/// the given weight rows refined by degrevlex, and is dehomogenized afterwards.
/// The rows must give every Weyl pair a nonnegative total weight. For a global
/// order the result is a reduced Gröbner basis; for a non-global weight order
/// it is a basis whose leading forms generate the initial ideal.
std::vector<Polynomial> weylGB(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                               const engine::GBOptions& options = {});

/// Generators of <gens> ∩ (subalgebra without the variables in `vars`).
/// The subset must be closed under Weyl partners or contain only one side of
/// each pair it touches.
std::vector<Polynomial> weylEliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& vars,
                                      const engine::GBOptions& options = {});

/// Minimum and maximum weight over the terms of a nonzero element.
std::pair<long, long> weightDegree(const Polynomial& e, const std::vector<int>& weight);
bool isWeightHomogeneous(const Polynomial& e, const std::vector<int>& weight);

/// Generators of in_(-w,w) of the left ideal, where `weight` gives the weight of
/// each variable (coordinates carry -w, derivations +w).
std::vector<Polynomial> initialIdeal(const std::vector<Polynomial>& gens, const std::vector<int>& weight,
                                     const engine::GBOptions& options = {});

/// psi(e) = t^d e if d >= 0, dt^(-d) e if d < 0, for e homogeneous of weight d
/// (single t variable).
Polynomial psiMap(const WeylAlgebra& D, const Polynomial& e);

/// Generators of J*, the ideal generated by the weight-homogeneous elements of J.
std::vector<Polynomial> starIdeal(const std::vector<Polynomial>& gens, const std::vector<int>& weight,
                                  const engine::GBOptions& options = {});

/// Gröbner basis under the generators' own ring order.
std::vector<Polynomial> weylGB(const std::vector<Polynomial>& gens, const engine::GBOptions& options = {});

}  // namespace dmod

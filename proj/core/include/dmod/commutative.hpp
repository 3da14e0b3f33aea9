#pragma once

#include <cstddef>
#include <vector>

#include "dmod/groebner.hpp"
#include "dmod/monomial_order.hpp"
#include "dmod/polynomial.hpp"

namespace dmod {

/// Element of a free module R^k.
struct FreeModuleVector {
  std::vector<Polynomial> components;
  friend bool operator==(const FreeModuleVector&, const FreeModuleVector&) = default;
};

/// Reduced Gröbner basis under `order`; the result lives in the ring of the
/// generators re-equipped with `order`. Zero generators are ignored; the zero
/// ideal gives an empty basis.
std::vector<Polynomial> gb(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                           const engine::GBOptions& options = {});
/// Reduced Gröbner basis under the generators' own ring order.
std::vector<Polynomial> gb(const std::vector<Polynomial>& gens, const engine::GBOptions& options = {});

/// Normal form of p modulo a Gröbner basis (under the basis' ring order). Exact over Q.
Polynomial nf(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Generators of the kernel of R^k -> R^N, e_i -> vectors[i].
std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& vectors);

/// Generators of the submodule {q : (0,...,0,q) in <(v_i, 0)> + <(w, 1)>}, i.e. the
/// last coordinates of the syzygies of vectors ∪ {last}. One elimination Gröbner basis.
std::vector<Polynomial> syzygyLastCoordinate(const std::vector<FreeModuleVector>& vectors,
                                             const FreeModuleVector& last);

/// Generators of <gens> ∩ K[variables not in vars].
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& vars);

/// <sub> ⊆ <ideal>.
bool idealContains(const std::vector<Polynomial>& ideal, const std::vector<Polynomial>& sub);
bool idealEquals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
bool isMember(const Polynomial& p, const std::vector<Polynomial>& ideal);
bool isUnitIdeal(const std::vector<Polynomial>& ideal);

/// Drops generators lying in the ideal of the ones kept before them, scanning by
/// increasing total degree. Minimal for homogeneous ideals; {1} for the unit ideal.
std::vector<Polynomial> minimalGenerators(const std::vector<Polynomial>& gens);

std::vector<Polynomial> idealIntersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
std::vector<Polynomial> idealProduct(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
/// p ∈ rad<ideal> (Rabinowitsch trick).
bool inRadical(const Polynomial& p, const std::vector<Polynomial>& ideal);
/// Krull dimension of R/<ideal>; -1 for the unit ideal.
int krullDimension(const std::vector<Polynomial>& ideal);

/// Every monomial of total degree d lies in the ideal generated by the leading monomials of `basis`.
bool containsAllMonomialsOfDegree(const std::vector<Polynomial>& basis, unsigned d);

namespace detail {
/// Ring with one more central variable appended (same multiplication rule, degrevlex tie-break
/// with every existing weight row extended by `rowEntry`).
RingPtr appendVariable(const RingPtr& ring, const std::string& name, int rowEntry = 0);
std::string freshName(const Ring& ring, const std::string& base);
std::vector<int> identityMap(std::size_t n);
}  // namespace detail

}  // namespace dmod

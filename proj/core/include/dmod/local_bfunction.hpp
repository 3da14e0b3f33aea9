#pragma once

#include <cstddef>
#include <vector>

#include "dmod/options.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/univariate.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

/// E_b = {h in K[x] : h*b(s) in <G> within s-degree <= deg b}, for G in a
/// commutative ring K[x, s] whose variable `s` is the b-function variable.
/// Returned in the ring of G (the generators do not involve s).
std::vector<Polynomial> exceptionalLocusCore(const std::vector<Polynomial>& G, std::size_t s, const BPoly& b,
                                             const Options& options = {});

/// For one t variable: psi(h) in K[x, s] for (-w,w)-homogeneous h free of dx,
/// with t^k dt^k rewritten through s = -dt t. `xs` is K[x] with s appended last.
std::vector<Polynomial> psiImagesInXS(const WeylAlgebra& D, const std::vector<Polynomial>& hs, const RingPtr& xs);

/// Generators of in_(-w,w) I_f ∩ K[x, s] through the psi map, in the ring
/// K[x] with s appended as its last variable.
std::vector<Polynomial> initialIdealInXS(const Polynomial& f, const Options& options = {});

/// E_b for the hypersurface f: b_{f,P} divides b iff E_b is not contained in P.
/// Returned in the ring of f.
std::vector<Polynomial> exceptionalLocusB(const Polynomial& f, const BPoly& b, const Options& options = {});

/// Local Bernstein–Sato polynomial of f at the prime ideal P (generators in the ring of f).
BPoly localBFunction(const Polynomial& f, const std::vector<Polynomial>& P, const Options& options = {});

/// Locally closed set V(closure) minus the union of V(excluded[k]).
struct Stratum {
  BPoly b;
  std::vector<Polynomial> closure;
  std::vector<std::vector<Polynomial>> excluded;
};

struct Stratification {
  BPoly global;
  std::vector<Stratum> strata;
};

/// Partition of affine space by the local b-function of f (points off V(f) get b = 1).
Stratification stratifyByLocalB(const Polynomial& f, const Options& options = {});

/// Precomputed data for repeated local questions about one polynomial.
class LocalBData {
 public:
  LocalBData(const Polynomial& f, const Options& options = {});

  const Polynomial& f() const { return f_; }
  const BPoly& global() const { return global_; }
  /// in_(-w,w) I_f ∩ K[x,s] in K[x][s], s last.
  const std::vector<Polynomial>& xsIdeal() const { return xs_; }
  std::vector<Polynomial> exceptionalLocus(const BPoly& b) const;
  BPoly localAt(const std::vector<Polynomial>& P) const;
  Stratification stratify() const;

 private:
  Polynomial f_;
  Options options_;
  std::vector<Polynomial> xs_;
  BPoly global_;
};

}  // namespace dmod

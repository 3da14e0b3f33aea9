#include "dmod/bfunction.hpp"

#include <numeric>

#include "dmod/commutative.hpp"
#include "dmod/errors.hpp"
#include "dmod/linear_algebra.hpp"

namespace dmod {

BPoly linearAlgebraTrickWithBasis(const Polynomial& g, const std::vector<Polynomial>& basis, const Polynomial& sigma,
                                  const Options& options) {
  if (g.isZero()) throw PreconditionError("linearAlgebraTrick: g must be nonzero");
  const RingPtr& ring = basis.empty() ? g.ring() : basis.front().ring();
  Polynomial cur = nf(g.reordered(ring), basis);
  Polynomial s = sigma.reordered(ring);
  DependencyFinder finder(ring);
  std::vector<std::string> partial;
  for (std::size_t d = 0; d <= options.iterationCap; ++d) {
    if (auto dep = finder.add(cur)) {
      std::vector<Rational> coeffs(d + 1);
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = -(*dep)[j];
      coeffs[d] = 1;
      options.note("linear algebra: dependency found in degree " + std::to_string(d));
      return BPoly::fromCoefficients(std::move(coeffs));
    }
    partial.push_back("NF(sigma^" + std::to_string(d) + " g) has " + std::to_string(cur.size()) + " terms");
    cur = nf(s * cur, basis);
  }
  throw IterationCapExceeded("no polynomial b of degree <= " + std::to_string(options.iterationCap) +
                                 " with b(sigma) g in the ideal",
                             std::move(partial));
}

BPoly linearAlgebraTrick(const Polynomial& g, const std::vector<Polynomial>& gens, const Polynomial& sigma,
                         const Options& options) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : gens)
    if (!p.isZero()) nonzero.push_back(p);
  std::vector<Polynomial> basis;
  if (!nonzero.empty()) {
    basis = nonzero.front().ring()->isCommutative() ? gb(nonzero, options.gb()) : weylGB(nonzero, options.gb());
  }
  return linearAlgebraTrickWithBasis(g, basis, sigma, options);
}

Annihilator annFs(const Polynomial& f, const Options& options) {
  if (f.isZero()) throw PreconditionError("annFs: f must be nonzero");
  WeylAlgebra D(f.ring(), 1);
  auto star = starIdeal(buildIf(D, {f}), D.tWeight(), options.gb());
  WeylAlgebra Ds = D.withExtras({"s"});
  auto into = D.mapInto(Ds);
  const std::size_t sIdx = Ds.extra(0);
  std::vector<Polynomial> gens;
  for (const auto& p : star) gens.push_back(p.mapTo(Ds.ring(), into));
  // The generators are (-w,w)-homogeneous, so adjoining s - sigma realizes I_f ∩ D[sigma].
  gens.push_back(Ds.variable(sIdx) - Ds.sigma());
  auto elim = weylEliminate(gens, {Ds.t(0), Ds.dt(0)}, options.gb());

  const std::size_t n = D.n();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(Ds.ring()->name(Ds.x(i)));
  for (std::size_t i = 0; i < n; ++i) names.push_back(Ds.ring()->name(Ds.dx(i)));
  names.push_back(Ds.ring()->name(sIdx));
  std::vector<WeylPair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, n + i});
  Annihilator out;
  out.ring = makeRing(std::move(names), MonomialOrder::degrevlex(), std::move(pairs));
  out.s = 2 * n;
  std::vector<int> map(Ds.ring()->size(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    map[Ds.x(i)] = int(i);
    map[Ds.dx(i)] = int(n + i);
  }
  map[sIdx] = int(2 * n);
  for (const auto& p : elim) out.generators.push_back(p.mapTo(out.ring, map));
  return out;
}

BPoly globalBFunction(const Polynomial& f, BMethod method, const Options& options) {
  if (f.isZero()) throw PreconditionError("globalBFunction: f must be nonzero");
  if (!f.ring()->isCommutative()) throw RingMismatch("globalBFunction: f must be a commutative polynomial");
  if (f.isConstant()) {
    options.warning("f is a nonzero constant; its b-function is 1");
    return BPoly();
  }
  if (method == BMethod::InitialIdeal) {
    WeylAlgebra D(f.ring(), 1);
    auto in = initialIdeal(buildIf(D, {f}), D.tWeight(), options.gb());
    options.note("initial ideal: " + std::to_string(in.size()) + " generators");
    return linearAlgebraTrick(Polynomial::constant(D.ring(), 1), in, D.sigma(), options);
  }
  auto ann = annFs(f, options);
  std::vector<int> map(f.ring()->size());
  std::iota(map.begin(), map.end(), 0);
  auto gens = ann.generators;
  gens.push_back(f.mapTo(ann.ring, map));
  return linearAlgebraTrick(Polynomial::constant(ann.ring, 1), gens, Polynomial::variable(ann.ring, ann.s), options);
}

}  // namespace dmod

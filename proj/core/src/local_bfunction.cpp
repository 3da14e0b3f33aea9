#include "dmod/local_bfunction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dmod/commutative.hpp"
#include "dmod/errors.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

// K[x] obtained from a commutative ring by dropping variable s, with maps both ways.
struct DropVariable {
  RingPtr small;
  std::vector<int> down;  // large -> small, -1 for s
  std::vector<int> up;    // small -> large
};

DropVariable dropVariable(const RingPtr& ring, std::size_t s) {
  DropVariable d;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i == s) {
      d.down.push_back(-1);
      continue;
    }
    d.down.push_back(int(names.size()));
    d.up.push_back(int(i));
    names.push_back(ring->name(i));
  }
  d.small = makeRing(std::move(names));
  return d;
}

bool containedIn(const std::vector<Polynomial>& E, const std::vector<Polynomial>& primeBasis) {
  return std::all_of(E.begin(), E.end(), [&](const Polynomial& e) { return nf(e, primeBasis).isZero(); });
}

}  // namespace

std::vector<Polynomial> exceptionalLocusCore(const std::vector<Polynomial>& G, std::size_t s, const BPoly& b,
                                             const Options& options) {
  if (G.empty()) return {};
  requireSameRing(G, "exceptionalLocusCore");
  const RingPtr& ring = G.front().ring();
  if (!ring->isCommutative()) throw RingMismatch("exceptionalLocusCore: G must be commutative");
  if (s >= ring->size()) throw PreconditionError("exceptionalLocusCore: s index out of range");
  auto drop = dropVariable(ring, s);
  std::vector<bool> flag(ring->size(), false);
  flag[s] = true;
  auto basis = gb(G, MonomialOrder::elimination(flag), options.gb());
  const unsigned d = b.degree();

  // Coefficient vectors over K[x] of s^i g, indexed by powers of s.
  auto coefficients = [&](const Polynomial& p, unsigned shift) {
    std::vector<std::vector<Term>> parts(d + 1);
    for (const auto& t : p.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < ring->size(); ++i)
        if (drop.down[i] >= 0) m.exp[std::size_t(drop.down[i])] = t.mono.exp[i];
      m.recompute();
      parts[t.mono[s] + shift].push_back({m, t.coef});
    }
    FreeModuleVector v;
    for (auto& part : parts) v.components.emplace_back(drop.small, std::move(part));
    return v;
  };
  std::vector<FreeModuleVector> vectors;
  for (const auto& g : basis) {
    long dg = g.degreeIn(s);
    for (long i = 0; i + dg <= long(d); ++i) vectors.push_back(coefficients(g, unsigned(i)));
  }
  FreeModuleVector bv;
  for (const auto& c : b.coefficients()) bv.components.push_back(Polynomial::constant(drop.small, c));
  std::vector<Polynomial> out;
  for (const auto& h : syzygyLastCoordinate(vectors, bv)) out.push_back(h.mapTo(ring, drop.up));
  return out;
}

std::vector<Polynomial> psiImagesInXS(const WeylAlgebra& D, const std::vector<Polynomial>& hs, const RingPtr& xs) {
  if (D.r() != 1) throw PreconditionError("psiImagesInXS: needs exactly one t variable");
  const std::size_t n = D.n(), s = n;
  auto w = D.tWeight();
  // t^k dt^k = prod_{j=0}^{k-1} (t dt - j) and t dt = -s - 1.
  std::vector<Polynomial> falling{Polynomial::constant(xs, 1)};
  auto factorFor = [&](unsigned k) {
    while (falling.size() <= k) {
      std::size_t j = falling.size();
      falling.push_back(falling.back() *
                        (-Polynomial::variable(xs, s) - Polynomial::constant(xs, Rational(long(j)))));
    }
    return falling[k];
  };
  std::vector<Polynomial> out;
  for (const auto& h : hs) {
    if (h.isZero()) continue;
    if (!isWeightHomogeneous(h, w)) throw Error("psiImagesInXS: inhomogeneous element");
    for (std::size_t i = 0; i < n; ++i)
      if (h.involves(D.dx(i))) throw Error("psiImagesInXS: element involves " + D.ring()->name(D.dx(i)));
    Polynomial psi = psiMap(D, h);
    Polynomial p(xs);
    for (const auto& t : psi.terms()) {
      unsigned k = t.mono[D.t(0)];
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) m.exp[i] = t.mono.exp[D.x(i)];
      m.recompute();
      p += Polynomial::monomial(xs, m, t.coef) * factorFor(k);
    }
    if (!p.isZero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> initialIdealInXS(const Polynomial& f, const Options& options) {
  if (!f.ring()->isCommutative()) throw RingMismatch("f must be a commutative polynomial");
  if (f.isConstant()) throw PreconditionError("f must be nonconstant");
  WeylAlgebra D(f.ring(), 1);
  auto in = initialIdeal(buildIf(D, {f}), D.tWeight(), options.gb());
  std::vector<std::size_t> dxs;
  for (std::size_t i = 0; i < D.n(); ++i) dxs.push_back(D.dx(i));
  auto xs = detail::appendVariable(f.ring(), "s");
  return gb(psiImagesInXS(D, weylEliminate(in, dxs, options.gb()), xs), options.gb());
}

LocalBData::LocalBData(const Polynomial& f, const Options& options) : f_(f), options_(options) {
  xs_ = initialIdealInXS(f, options);
  const std::size_t n = f.ring()->size();
  std::vector<std::size_t> xvars(n);
  std::iota(xvars.begin(), xvars.end(), 0);
  auto onlyS = eliminate(xs_, xvars);
  if (onlyS.size() != 1) throw Error("b-function elimination did not give a principal ideal");
  std::vector<Rational> coeffs(std::size_t(onlyS[0].degreeIn(n)) + 1);
  for (const auto& t : onlyS[0].terms()) coeffs[t.mono[n]] += t.coef;
  global_ = BPoly::fromCoefficients(std::move(coeffs));
}

std::vector<Polynomial> LocalBData::exceptionalLocus(const BPoly& b) const {
  const std::size_t n = f_.ring()->size();
  std::vector<int> down(n + 1, -1);
  std::iota(down.begin(), down.end() - 1, 0);
  std::vector<Polynomial> out;
  for (const auto& e : exceptionalLocusCore(xs_, n, b, options_)) out.push_back(e.mapTo(f_.ring(), down));
  return out;
}

BPoly LocalBData::localAt(const std::vector<Polynomial>& P) const {
  std::vector<Polynomial> gens;
  for (const auto& p : P)
    if (!p.isZero()) gens.push_back(p.reordered(f_.ring()));
  std::vector<Polynomial> basis;
  if (!gens.empty()) {
    basis = gb(gens);
    if (basis.size() == 1 && basis.front().isConstant()) throw PreconditionError("localBFunction: P is the unit ideal");
  }
  BPoly b = global_;
  for (const auto& root : global_.roots()) {
    while (b.multiplicity(root.root) > 0) {
      BPoly smaller = b.withoutRoot(root.root);
      if (containedIn(exceptionalLocus(smaller), basis)) break;
      b = std::move(smaller);
    }
  }
  return b;
}

namespace {

// V(closure) \ union V(excluded) is empty iff the product of the excluded ideals
// lies in the radical of the closure.
bool isEmptyStratum(const std::vector<Polynomial>& closure, const std::vector<std::vector<Polynomial>>& excluded) {
  if (!closure.empty() && isUnitIdeal(closure)) return true;
  if (excluded.empty()) return false;
  auto inRad = [&](const std::vector<Polynomial>& ideal) {
    return std::all_of(ideal.begin(), ideal.end(), [&](const Polynomial& p) {
      return closure.empty() ? p.isZero() : inRadical(p, closure);
    });
  };
  for (const auto& e : excluded)
    if (inRad(e)) return true;
  std::vector<Polynomial> product = excluded.front();
  for (std::size_t k = 1; k < excluded.size(); ++k) product = gb(idealProduct(product, excluded[k]));
  return inRad(product);
}

}  // namespace

Stratification LocalBData::stratify() const {
  struct RootData {
    Rational root;
    unsigned mult;
    std::vector<std::vector<Polynomial>> E;  // E[i] for i = 0..mult-1
  };
  std::vector<RootData> roots;
  for (const auto& r : global_.roots()) {
    RootData d{r.root, r.multiplicity, {}};
    for (unsigned i = 0; i < r.multiplicity; ++i) {
      BPoly b = global_;
      for (unsigned k = 0; k < r.multiplicity - i; ++k) b = b.withoutRoot(r.root);
      d.E.push_back(exceptionalLocus(b));
    }
    roots.push_back(std::move(d));
  }

  Stratification out;
  out.global = global_;
  std::vector<unsigned> chosen(roots.size());
  std::function<void(std::size_t, std::vector<Polynomial>, std::vector<std::vector<Polynomial>>)> walk =
      [&](std::size_t k, std::vector<Polynomial> closure, std::vector<std::vector<Polynomial>> excluded) {
        if (isEmptyStratum(closure, excluded)) return;
        if (k == roots.size()) {
          std::vector<RootMultiplicity> factors;
          for (std::size_t j = 0; j < roots.size(); ++j)
            if (chosen[j] > 0) factors.push_back({roots[j].root, chosen[j]});
          out.strata.push_back(
              {BPoly::fromRoots(std::move(factors)), closure.empty() ? closure : gb(closure), std::move(excluded)});
          return;
        }
        const auto& rd = roots[k];
        for (unsigned i = 0; i <= rd.mult; ++i) {
          chosen[k] = i;
          auto c = closure;
          auto e = excluded;
          // Multiplicity exactly i: on V(E[i-1]) and off V(E[i]).
          if (i > 0) c.insert(c.end(), rd.E[i - 1].begin(), rd.E[i - 1].end());
          if (i < rd.mult) e.push_back(rd.E[i]);
          walk(k + 1, std::move(c), std::move(e));
        }
      };
  walk(0, {}, {});
  return out;
}

std::vector<Polynomial> exceptionalLocusB(const Polynomial& f, const BPoly& b, const Options& options) {
  return LocalBData(f, options).exceptionalLocus(b);
}

BPoly localBFunction(const Polynomial& f, const std::vector<Polynomial>& P, const Options& options) {
  return LocalBData(f, options).localAt(P);
}

Stratification stratifyByLocalB(const Polynomial& f, const Options& options) {
  return LocalBData(f, options).stratify();
}

}  // namespace dmod

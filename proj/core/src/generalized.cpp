#include "dmod/generalized.hpp"

#include <functional>

#include "dmod/bfunction.hpp"
#include "dmod/commutative.hpp"
#include "dmod/errors.hpp"
#include "dmod/multiplier.hpp"

namespace dmod {

std::vector<Polynomial> normalizedGenerators(const std::vector<Polynomial>& f, const char* what) {
  std::vector<Polynomial> out;
  for (const auto& p : f)
    if (!p.isZero()) out.push_back(p);
  if (out.empty()) throw PreconditionError(std::string(what) + ": the ideal generated by f is zero");
  requireSameRing(out, what);
  if (!out.front().ring()->isCommutative()) throw RingMismatch(std::string(what) + ": f must be commutative");
  return out;
}

std::vector<Polynomial> starOfIf(const WeylAlgebra& D, const std::vector<Polynomial>& f, const Options& options) {
  auto star = starIdeal(buildIf(D, f), D.tWeight(), options.gb());
  options.note("star ideal: " + std::to_string(star.size()) + " generators");
  return star;
}

std::vector<Polynomial> powersOfDegree(const std::vector<Polynomial>& f, unsigned m) {
  std::vector<Polynomial> out;
  const RingPtr& ring = f.front().ring();
  std::function<void(std::size_t, unsigned, const Polynomial&)> walk = [&](std::size_t i, unsigned left,
                                                                           const Polynomial& acc) {
    if (i + 1 == f.size()) {
      out.push_back(acc * f[i].pow(left));
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) walk(i + 1, left - a, acc * f[i].pow(a));
  };
  walk(0, m, Polynomial::constant(ring, 1));
  return out;
}

namespace {

void checkG(const Polynomial& g, const std::vector<Polynomial>& f, const char* what) {
  if (g.isZero()) throw PreconditionError(std::string(what) + ": g must be nonzero");
  if (!g.ring()->sameAlgebra(*f.front().ring())) throw RingMismatch(std::string(what) + ": g and f in different rings");
}

BPoly generalBInitial(const std::vector<Polynomial>& f, const Polynomial& g, const Options& options) {
  WeylAlgebra D(f.front().ring(), f.size());
  WeylAlgebra Da = D.withExtras({"a"});
  auto into = D.mapInto(Da);
  const std::size_t a = Da.extra(D.extraCount());
  auto av = Da.variable(a);
  auto ga = Da.embed(g);
  std::vector<Polynomial> gens;
  for (const auto& p : buildIf(D, f)) gens.push_back(av * p.mapTo(Da.ring(), into));
  // Left ideal: (1-a)*g generates (1-a)*D_Y*g since a is central.
  gens.push_back((Polynomial::constant(Da.ring(), 1) - av) * ga);
  std::vector<int> back(Da.ring()->size(), -1);
  for (std::size_t i = 0; i < into.size(); ++i) back[std::size_t(into[i])] = int(i);
  std::vector<Polynomial> meet;
  for (const auto& p : weylEliminate(gens, {a}, options.gb())) meet.push_back(p.mapTo(D.ring(), back));
  options.note("intersection with D*g: " + std::to_string(meet.size()) + " generators");
  auto in = initialIdeal(meet, D.tWeight(), options.gb());
  return linearAlgebraTrick(D.embed(g), in, D.sigma(), options);
}

}  // namespace

BPoly generalB(const std::vector<Polynomial>& fIn, const Polynomial& g, GeneralBMethod method, const Options& options) {
  auto f = normalizedGenerators(fIn, "generalB");
  checkG(g, f, "generalB");
  if (method == GeneralBMethod::InitialIdeal) return generalBInitial(f, g, options);
  WeylAlgebra D(f.front().ring(), f.size());
  auto gens = starOfIf(D, f, options);
  // The star ideal is weight homogeneous, so the relation s - sigma adds nothing and sigma is used directly.
  for (const auto& fi : f) gens.push_back(D.embed(g * fi));
  return linearAlgebraTrick(D.embed(g), gens, D.sigma(), options);
}

BPoly generalBm(const std::vector<Polynomial>& fIn, const Polynomial& g, unsigned m, const Options& options) {
  auto f = normalizedGenerators(fIn, "generalBm");
  checkG(g, f, "generalBm");
  if (m == 0) throw PreconditionError("generalBm: m must be positive");
  WeylAlgebra D(f.front().ring(), f.size());
  auto gens = starOfIf(D, f, options);
  for (const auto& p : powersOfDegree(f, m)) gens.push_back(D.embed(p));
  return linearAlgebraTrick(D.embed(g), gens, D.sigma(), options);
}

std::optional<Rational> minimalNegatedRoot(const BPoly& b) {
  auto roots = b.negatedRoots();
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

bool inMultiplierIdealViaBS(const std::vector<Polynomial>& fIn, const Polynomial& g, const Rational& c,
                            std::optional<unsigned> m, const Options& options) {
  if (c < 0) throw PreconditionError("inMultiplierIdealViaBS: c must be nonnegative");
  // Membership only depends on the ideal, so redundant generators are dropped first.
  auto f = minimalGenerators(normalizedGenerators(fIn, "inMultiplierIdealViaBS"));
  if (g.isZero()) return true;
  BPoly b;
  if (m) {
    auto threshold = lct(f, options);
    if (threshold && c >= Rational(long(*m)) + *threshold)
      throw PreconditionError("inMultiplierIdealViaBS: the m-generalized test needs c < m + lct(f) = " +
                              toString(Rational(long(*m)) + *threshold));
    b = generalBm(f, g, *m, options);
  } else {
    b = generalB(f, g, GeneralBMethod::StarIdeal, options);
  }
  auto least = minimalNegatedRoot(b);
  return !least || c < *least;
}

bool hasRationalSingularities(const std::vector<Polynomial>& fIn, const Options& options) {
  auto f = normalizedGenerators(fIn, "hasRationalSingularities");
  const long n = long(f.front().ring()->size()), r = long(f.size());
  int dim = krullDimension(f);
  if (dim != n - r)
    throw PreconditionError("hasRationalSingularities: V(f) has dimension " + std::to_string(dim) + ", expected " +
                            std::to_string(n - r));
  auto b = generalB(f, Polynomial::constant(f.front().ring(), 1), GeneralBMethod::StarIdeal, options);
  auto least = minimalNegatedRoot(b);
  return least && *least == Rational(r) && b.multiplicity(-*least) == 1;
}

}  // namespace dmod

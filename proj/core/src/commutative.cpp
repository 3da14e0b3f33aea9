#include "dmod/commutative.hpp"

#include <algorithm>
#include <numeric>

#include "dmod/errors.hpp"

namespace dmod {

namespace detail {

std::string freshName(const Ring& ring, const std::string& base) {
  std::string name = base;
  for (int k = 0; ring.indexOf(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

RingPtr appendVariable(const RingPtr& ring, const std::string& name, int rowEntry) {
  auto names = ring->names();
  names.push_back(freshName(*ring, name));
  auto rows = ring->order().rows();
  for (auto& r : rows) {
    r.resize(ring->size(), 0);
    r.push_back(rowEntry);
  }
  return makeRing(std::move(names), MonomialOrder::matrix(std::move(rows), ring->order().tieBreak()),
                  ring->weylPairs(), ring->homogenizer());
}

std::vector<int> identityMap(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace detail

namespace {

std::vector<engine::IPoly> integralGens(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<engine::IPoly> out;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    out.push_back(engine::toIntegral(g.reordered(ring)));
  }
  return out;
}

RingPtr commonRing(const std::vector<Polynomial>& gens, const char* what) {
  requireSameRing(gens, what);
  for (const auto& g : gens)
    if (g.ring()) return g.ring();
  throw PreconditionError(std::string(what) + ": no ring (empty generator list)");
}

}  // namespace

std::vector<Polynomial> gb(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                           const engine::GBOptions& options) {
  auto ring = commonRing(gens, "gb")->withOrder(order);
  auto basis = engine::buchberger(*ring, integralGens(gens, ring), options);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(engine::toPolynomial(ring, b));
  return out;
}

std::vector<Polynomial> gb(const std::vector<Polynomial>& gens, const engine::GBOptions& options) {
  auto ring = commonRing(gens, "gb");
  return gb(gens, ring->order(), options);
}

Polynomial nf(const Polynomial& p, const std::vector<Polynomial>& basis) {
  if (basis.empty() || p.isZero()) return p;
  requireSameRing(basis, "nf");
  const auto& ring = basis.front().ring();
  if (!p.ring()->sameAlgebra(*ring)) throw RingMismatch("nf: polynomial and basis live in different rings");
  std::vector<engine::IPoly> ib;
  ib.reserve(basis.size());
  for (const auto& b : basis) ib.push_back(engine::toIntegral(b));
  engine::ReducerSet reducers(*ring);
  for (const auto& b : ib) reducers.add(&b);
  Rational inScale, redScale;
  auto ip = engine::toIntegral(p.reordered(ring), &inScale);
  auto r = engine::reduce(*ring, std::move(ip), reducers, true, &redScale);
  // r = redScale * inScale * p  (mod the ideal)
  return engine::toPolynomial(ring, r, redScale * inScale).reordered(p.ring());
}

namespace {

// Module elements are IPolys whose terms carry component indices.
engine::IPoly moduleElement(const RingPtr& ring, const std::vector<Polynomial>& comps,
                            std::size_t offset) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].isZero()) continue;
    if (!comps[c].ring()->sameAlgebra(*ring)) throw RingMismatch("module components live in different rings");
    Polynomial local = comps[c].reordered(ring);
    for (const auto& t : local.terms()) {
      Term u = t;
      u.mono.component = static_cast<std::uint16_t>(c + offset);
      terms.push_back(u);
    }
  }
  // Sorting goes through Polynomial, which orders by component first.
  return engine::toIntegral(Polynomial(ring, std::move(terms)));
}

std::vector<Polynomial> splitComponents(const RingPtr& ring, const engine::IPoly& p, std::size_t offset,
                                        std::size_t count) {
  std::vector<std::vector<Term>> parts(count);
  for (const auto& t : p) {
    Term u{t.mono, Rational(t.coef)};
    std::size_t c = u.mono.component - offset;
    u.mono.component = 0;
    parts[c].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& part : parts) out.emplace_back(ring, std::move(part));
  return out;
}

RingPtr moduleRing(const std::vector<FreeModuleVector>& vectors) {
  for (const auto& v : vectors)
    for (const auto& c : v.components)
      if (c.ring()) return c.ring();
  return nullptr;
}

}  // namespace

std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& vectors) {
  auto ring = moduleRing(vectors);
  if (!ring) {
    // Every vector is zero (or there are none): the syzygy module is free.
    std::vector<FreeModuleVector> out;
    return out;
  }
  std::size_t rank = 0;
  for (const auto& v : vectors) rank = std::max(rank, v.components.size());
  const std::size_t k = vectors.size();
  std::vector<engine::IPoly> gens;
  for (std::size_t i = 0; i < k; ++i) {
    auto comps = vectors[i].components;
    comps.resize(rank, Polynomial(ring));
    comps.resize(rank + k, Polynomial(ring));
    comps[rank + i] = Polynomial::constant(ring, 1);
    gens.push_back(moduleElement(ring, comps, 0));
  }
  auto basis = engine::buchberger(*ring, std::move(gens));
  std::vector<FreeModuleVector> out;
  for (const auto& b : basis) {
    if (b.front().mono.component < rank) continue;
    out.push_back({splitComponents(ring, b, rank, k)});
  }
  return out;
}

std::vector<Polynomial> syzygyLastCoordinate(const std::vector<FreeModuleVector>& vectors,
                                             const FreeModuleVector& last) {
  std::vector<FreeModuleVector> all = vectors;
  all.push_back(last);
  auto ring = moduleRing(all);
  if (!ring) throw PreconditionError("syzygyLastCoordinate: all vectors are zero");
  std::size_t rank = 0;
  for (const auto& v : all) rank = std::max(rank, v.components.size());
  std::vector<engine::IPoly> gens;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto comps = all[i].components;
    comps.resize(rank, Polynomial(ring));
    comps.push_back(i + 1 == all.size() ? Polynomial::constant(ring, 1) : Polynomial(ring));
    auto e = moduleElement(ring, comps, 0);
    if (!e.empty()) gens.push_back(std::move(e));
  }
  auto basis = engine::buchberger(*ring, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    if (b.front().mono.component < rank) continue;
    out.push_back(splitComponents(ring, b, rank, 1).front());
  }
  return out;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& vars) {
  auto ring = commonRing(gens, "eliminate");
  std::vector<bool> flag(ring->size(), false);
  for (auto v : vars) {
    if (v >= ring->size()) throw PreconditionError("eliminate: variable index out of range");
    flag[v] = true;
  }
  auto basis = gb(gens, MonomialOrder::elimination(flag));
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    bool free = std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return b.involves(v); });
    if (free) out.push_back(b.reordered(ring));
  }
  return out;
}

bool idealContains(const std::vector<Polynomial>& ideal, const std::vector<Polynomial>& sub) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : ideal)
    if (!p.isZero()) nonzero.push_back(p);
  if (nonzero.empty()) return std::all_of(sub.begin(), sub.end(), [](const Polynomial& p) { return p.isZero(); });
  auto basis = gb(nonzero);
  return std::all_of(sub.begin(), sub.end(), [&](const Polynomial& p) { return nf(p, basis).isZero(); });
}

bool idealEquals(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return idealContains(a, b) && idealContains(b, a);
}

bool isMember(const Polynomial& p, const std::vector<Polynomial>& ideal) { return idealContains(ideal, {p}); }

bool isUnitIdeal(const std::vector<Polynomial>& ideal) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : ideal)
    if (!p.isZero()) nonzero.push_back(p);
  if (nonzero.empty()) return false;
  auto basis = gb(nonzero);
  return basis.size() == 1 && basis.front().isConstant();
}

std::vector<Polynomial> minimalGenerators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> sorted;
  for (const auto& p : gens)
    if (!p.isZero()) sorted.push_back(p);
  if (sorted.empty()) return {};
  if (isUnitIdeal(sorted)) return {Polynomial::constant(sorted.front().ring(), 1)};
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.totalDegree() < b.totalDegree(); });
  std::vector<Polynomial> kept;
  for (const auto& p : sorted)
    if (kept.empty() || !isMember(p, kept)) kept.push_back(p);
  return kept;
}

std::vector<Polynomial> idealIntersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto ring = commonRing(all, "idealIntersection");
  auto ext = detail::appendVariable(ring, "tau");
  const std::size_t tau = ring->size();
  auto map = detail::identityMap(ring->size());
  auto T = Polynomial::variable(ext, tau);
  auto one = Polynomial::constant(ext, 1);
  std::vector<Polynomial> gens;
  for (const auto& p : a)
    if (!p.isZero()) gens.push_back(T * p.mapTo(ext, map));
  for (const auto& p : b)
    if (!p.isZero()) gens.push_back((one - T) * p.mapTo(ext, map));
  if (gens.empty()) return {};
  std::vector<int> back(ext->size(), -1);
  std::iota(back.begin(), back.end() - 1, 0);
  std::vector<Polynomial> out;
  for (const auto& p : eliminate(gens, {tau})) out.push_back(p.mapTo(ring, back));
  return out;
}

std::vector<Polynomial> idealProduct(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& p : a)
    for (const auto& q : b) {
      auto r = p * q;
      if (!r.isZero()) out.push_back(std::move(r));
    }
  return out;
}

bool inRadical(const Polynomial& p, const std::vector<Polynomial>& ideal) {
  if (p.isZero()) return true;
  auto ring = p.ring();
  auto ext = detail::appendVariable(ring, "y");
  auto map = detail::identityMap(ring->size());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal)
    if (!g.isZero()) gens.push_back(g.mapTo(ext, map));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, ring->size()) * p.mapTo(ext, map));
  return isUnitIdeal(gens);
}

int krullDimension(const std::vector<Polynomial>& ideal) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : ideal)
    if (!p.isZero()) nonzero.push_back(p);
  if (nonzero.empty()) throw PreconditionError("krullDimension: zero ideal needs an explicit ring");
  const std::size_t n = nonzero.front().ring()->size();
  auto basis = gb(nonzero, MonomialOrder::degrevlex());
  if (basis.size() == 1 && basis.front().isConstant()) return -1;
  // Largest set of variables containing no support of a leading monomial.
  std::vector<std::uint32_t> supports;
  for (const auto& b : basis) supports.push_back(b.leadMonomial().support);
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool containsAllMonomialsOfDegree(const std::vector<Polynomial>& basis, unsigned d) {
  if (basis.empty()) return false;
  const std::size_t n = basis.front().ring()->size();
  // Enumerate exponent vectors of total degree d.
  std::vector<unsigned> e(n, 0);
  std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) -> bool {
    if (i + 1 == n) {
      e[i] = left;
      Monomial mono;
      for (std::size_t j = 0; j < n; ++j) mono.set(j, static_cast<Exponent>(e[j]));
      return std::any_of(basis.begin(), basis.end(),
                         [&](const Polynomial& b) { return divides(b.leadMonomial(), mono, n); });
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      if (!rec(i + 1, left - k)) return false;
    }
    return true;
  };
  return rec(0, d);
}

}  // namespace dmod

#include "dmod/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "dmod/commutative.hpp"
#include "dmod/errors.hpp"

namespace dmod {

namespace {

std::string unique(std::string name, std::unordered_set<std::string>& taken) {
  std::string candidate = name;
  for (int k = 0; taken.count(candidate); ++k) candidate = name + "_" + std::to_string(k);
  taken.insert(candidate);
  return candidate;
}

RingPtr commonRing(const std::vector<Polynomial>& gens, const char* what) {
  requireSameRing(gens, what);
  for (const auto& g : gens)
    if (g.ring()) return g.ring();
  throw PreconditionError(std::string(what) + ": empty generator list");
}

long weightOf(const Monomial& m, const std::vector<int>& weight, std::size_t n) {
  long s = 0;
  for (std::size_t i = 0; i < n && i < weight.size(); ++i) s += long(weight[i]) * m.exp[i];
  return s;
}

// R plus a homogenizing variable H (last), rows padded with 0 for H.
RingPtr homogenizedRing(const Ring& ring, const MonomialOrder& order) {
  if (ring.homogenizer()) throw PreconditionError("ring is already homogenized");
  auto names = ring.names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  names.push_back(unique("H", taken));
  auto rows = order.resized(ring.size()).rows();
  for (auto& r : rows) {
    for (const auto& p : ring.weylPairs())
      if (r[p.coordinate] + r[p.derivation] < 0)
        throw PreconditionError("weight rows must give every Weyl pair a nonnegative total weight");
    r.push_back(0);
  }
  return makeRing(std::move(names), MonomialOrder::matrix(std::move(rows), order.tieBreak()), ring.weylPairs(),
                  ring.size());
}

engine::IPoly homogenize(const Polynomial& p, const RingPtr& target, std::size_t H) {
  unsigned top = 0;
  for (const auto& t : p.terms()) top = std::max<unsigned>(top, t.mono.degree);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    u.mono.set(H, static_cast<Exponent>(top - t.mono.degree));
    terms.push_back(std::move(u));
  }
  return engine::toIntegral(Polynomial(target, std::move(terms)));
}

engine::IPoly dehomogenize(const engine::IPoly& p, const Ring& target, std::size_t H) {
  engine::IPoly out;
  out.reserve(p.size());
  for (const auto& t : p) {
    engine::ITerm u = t;
    u.mono.exp[H] = 0;
    u.mono.recompute();
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(),
            [&](const engine::ITerm& a, const engine::ITerm& b) { return target.compare(a.mono, b.mono) > 0; });
  // Distinct homogeneous terms stay distinct after H -> 1, so no merging is needed.
  return out;
}

}  // namespace

WeylAlgebra::WeylAlgebra(RingPtr base, std::size_t r, std::vector<std::string> extras)
    : base_(std::move(base)), n_(base_->size()), r_(r) {
  if (!base_->isCommutative()) throw PreconditionError("WeylAlgebra: base ring must be commutative");
  if (n_ == 0 || r_ == 0) throw PreconditionError("WeylAlgebra: need n >= 1 and r >= 1");
  std::unordered_set<std::string> taken(base_->names().begin(), base_->names().end());
  std::vector<std::string> names = base_->names();
  std::vector<std::string> tNames;
  for (std::size_t j = 0; j < r_; ++j) tNames.push_back(unique(r_ == 1 ? "t" : "t" + std::to_string(j + 1), taken));
  names.insert(names.end(), tNames.begin(), tNames.end());
  for (std::size_t i = 0; i < n_; ++i) names.push_back(unique("d" + base_->name(i), taken));
  for (const auto& t : tNames) names.push_back(unique("d" + t, taken));
  for (auto& e : extras) names.push_back(unique(e, taken));
  std::vector<WeylPair> pairs;
  for (std::size_t i = 0; i < n_; ++i) pairs.push_back({x(i), dx(i)});
  for (std::size_t j = 0; j < r_; ++j) pairs.push_back({t(j), dt(j)});
  ring_ = makeRing(std::move(names), MonomialOrder::degrevlex(), std::move(pairs));
}

WeylAlgebra WeylAlgebra::withExtras(const std::vector<std::string>& more) const {
  std::vector<std::string> extras;
  for (std::size_t k = 0; k < extraCount(); ++k) extras.push_back(ring_->name(extra(k)));
  extras.insert(extras.end(), more.begin(), more.end());
  return WeylAlgebra(base_, r_, std::move(extras));
}

std::vector<int> WeylAlgebra::tWeight() const {
  std::vector<int> w(ring_->size(), 0);
  for (std::size_t j = 0; j < r_; ++j) {
    w[t(j)] = -1;
    w[dt(j)] = 1;
  }
  return w;
}

Polynomial WeylAlgebra::sigma() const {
  Polynomial s(ring_);
  for (std::size_t j = 0; j < r_; ++j) s -= variable(dt(j)) * variable(t(j));
  return s;
}

Polynomial WeylAlgebra::embed(const Polynomial& p) const {
  if (!p.ring()->sameAlgebra(*base_)) throw RingMismatch("embed: polynomial is not in the base ring");
  std::vector<int> map(n_);
  std::iota(map.begin(), map.end(), 0);
  return p.mapTo(ring_, map);
}

std::vector<int> WeylAlgebra::mapInto(const WeylAlgebra& larger) const {
  if (larger.n_ != n_ || larger.r_ != r_ || larger.ring_->size() < ring_->size())
    throw RingMismatch("mapInto: incompatible Weyl algebras");
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (ring_->name(i) != larger.ring_->name(i)) throw RingMismatch("mapInto: variable names differ");
  std::vector<int> map(ring_->size());
  std::iota(map.begin(), map.end(), 0);
  return map;
}

std::vector<Polynomial> buildIf(const WeylAlgebra& D, const std::vector<Polynomial>& f) {
  if (f.size() != D.r()) throw PreconditionError("buildIf: expected " + std::to_string(D.r()) + " polynomials");
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].isZero()) throw PreconditionError("buildIf: zero polynomial among the f_i");
    out.push_back(D.variable(D.t(j)) - D.embed(f[j]));
  }
  for (std::size_t i = 0; i < D.n(); ++i) {
    Polynomial g = D.variable(D.dx(i));
    for (std::size_t j = 0; j < f.size(); ++j) g += D.embed(f[j].derivative(i)) * D.variable(D.dt(j));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Polynomial> weylGB(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                               const engine::GBOptions& options) {
  auto ring = commonRing(gens, "weylGB");
  auto target = ring->withOrder(order);
  if (order.isGlobal(ring->size())) {
    // A term order is a well-order on normally ordered monomials, so Buchberger
    // runs in the Weyl algebra itself.
    std::vector<engine::IPoly> igens;
    for (const auto& g : gens)
      if (!g.isZero()) igens.push_back(engine::toIntegral(g.reordered(target)));
    if (igens.empty()) return {};
    auto basis = engine::reduceBasis(*target, engine::buchberger(*target, std::move(igens), options));
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(engine::toPolynomial(target, b));
    return out;
  }
  auto hring = homogenizedRing(*ring, order);
  const std::size_t H = ring->size();
  std::vector<engine::IPoly> hgens;
  for (const auto& g : gens)
    if (!g.isZero()) hgens.push_back(homogenize(g, hring, H));
  if (hgens.empty()) return {};

  auto hbasis = engine::buchberger(*hring, std::move(hgens), options);
  std::vector<engine::IPoly> basis;
  basis.reserve(hbasis.size());
  for (const auto& b : hbasis) basis.push_back(dehomogenize(b, *target, H));

  if (order.isGlobal(ring->size())) {
    basis = engine::reduceBasis(*target, std::move(basis));
  } else {
    // Leading monomials are right, but tails cannot be reduced under a non-global order.
    std::sort(basis.begin(), basis.end(),
              [&](const engine::IPoly& a, const engine::IPoly& b) {
                return target->compare(a.front().mono, b.front().mono) < 0;
              });
    std::vector<engine::IPoly> minimal;
    for (auto& b : basis) {
      bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const engine::IPoly& m) {
        return divides(m.front().mono, b.front().mono, ring->size());
      });
      if (!redundant) minimal.push_back(std::move(b));
    }
    basis = std::move(minimal);
  }
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(engine::toPolynomial(target, b));
  return out;
}

std::vector<Polynomial> weylGB(const std::vector<Polynomial>& gens, const engine::GBOptions& options) {
  return weylGB(gens, commonRing(gens, "weylGB")->order(), options);
}

std::vector<Polynomial> weylEliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& vars,
                                      const engine::GBOptions& options) {
  auto ring = commonRing(gens, "weylEliminate");
  std::vector<bool> flag(ring->size(), false);
  for (auto v : vars) {
    if (v >= ring->size()) throw PreconditionError("weylEliminate: variable index out of range");
    flag[v] = true;
  }
  std::vector<Polynomial> out;
  for (const auto& b : weylGB(gens, MonomialOrder::elimination(flag), options)) {
    bool free = std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return b.involves(v); });
    if (free) out.push_back(b.reordered(ring));
  }
  return out;
}

std::pair<long, long> weightDegree(const Polynomial& e, const std::vector<int>& weight) {
  if (e.isZero()) throw PreconditionError("weightDegree: zero element");
  const std::size_t n = e.ring()->size();
  long lo = weightOf(e.terms().front().mono, weight, n), hi = lo;
  for (const auto& t : e.terms()) {
    long w = weightOf(t.mono, weight, n);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return {lo, hi};
}

bool isWeightHomogeneous(const Polynomial& e, const std::vector<int>& weight) {
  if (e.isZero()) return true;
  auto [lo, hi] = weightDegree(e, weight);
  return lo == hi;
}

std::vector<Polynomial> initialIdeal(const std::vector<Polynomial>& gens, const std::vector<int>& weight,
                                     const engine::GBOptions& options) {
  auto ring = commonRing(gens, "initialIdeal");
  std::vector<Polynomial> out;
  for (const auto& b : weylGB(gens, MonomialOrder::weighted(weight), options)) {
    auto form = b.topWeightForm(weight).reordered(ring);
    if (std::find(out.begin(), out.end(), form) == out.end()) out.push_back(std::move(form));
  }
  return out;
}

Polynomial psiMap(const WeylAlgebra& D, const Polynomial& e) {
  if (D.r() != 1) throw PreconditionError("psiMap: only defined for a single t variable");
  if (!e.ring()->sameAlgebra(*D.ring())) throw RingMismatch("psiMap: element is not in D_Y");
  auto w = D.tWeight();
  auto [lo, hi] = weightDegree(e, w);
  if (lo != hi) throw PreconditionError("psiMap: element is not (-w,w)-homogeneous");
  if (hi >= 0) return D.variable(D.t(0)).pow(static_cast<unsigned>(hi)) * e;
  return D.variable(D.dt(0)).pow(static_cast<unsigned>(-hi)) * e;
}

std::vector<Polynomial> starIdeal(const std::vector<Polynomial>& gens, const std::vector<int>& weight,
                                  const engine::GBOptions& options) {
  auto ring = commonRing(gens, "starIdeal");
  const std::size_t n = ring->size();
  auto withH = detail::appendVariable(ring, "h");
  auto ext = detail::appendVariable(withH, "u");
  const std::size_t h = n, u = n + 1;
  auto map = detail::identityMap(n);
  std::vector<Polynomial> hgens;
  auto hVar = Polynomial::variable(ext, h), uVar = Polynomial::variable(ext, u);
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    long hi = weightDegree(g, weight).second;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Term v = t;
      v.mono.set(h, static_cast<Exponent>(hi - weightOf(t.mono, weight, n)));
      terms.push_back(std::move(v));
    }
    hgens.push_back(Polynomial(ext, std::move(terms)));
  }
  if (hgens.empty()) return {};
  hgens.push_back(hVar * uVar - Polynomial::constant(ext, 1));
  std::vector<int> back(ext->size(), -1);
  std::iota(back.begin(), back.begin() + long(n), 0);
  std::vector<Polynomial> out;
  for (const auto& p : weylEliminate(hgens, {h, u}, options)) out.push_back(p.mapTo(ring, back));
  return out;
}

}  // namespace dmod

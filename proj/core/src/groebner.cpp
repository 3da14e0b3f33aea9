#include "dmod/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "dmod/errors.hpp"

namespace dmod::engine {

IPoly toIntegral(const Polynomial& p, Rational* scale) {
  IPoly out;
  if (p.isZero()) {
    if (scale) *scale = 1;
    return out;
  }
  BigInt den = 1, g = 0;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    BigInt v = t.coef.get_num() * (den / t.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back({t.mono, std::move(v)});
  }
  if (out.front().coef < 0) g = -g;
  for (auto& t : out) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  if (scale) *scale = makeRational(den, g);
  return out;
}

Polynomial toPolynomial(const RingPtr& ring, const IPoly& p, const Rational& divisor) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    Rational c(t.coef);
    if (divisor != 1) c /= divisor;
    terms.push_back({t.mono, c});
  }
  return Polynomial(ring, std::move(terms));
}

namespace {

bool hasDerivation(const Ring& ring, const Monomial& m) {
  for (const auto& p : ring.weylPairs())
    if (m.exp[p.derivation] != 0) return true;
  return false;
}

void sortAndMerge(const Ring& ring, IPoly& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const ITerm& a, const ITerm& b) { return ring.compare(a.mono, b.mono) > 0; });
  IPoly out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      continue;
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    out.push_back(std::move(t));
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

IPoly mergeAdd(const Ring& ring, IPoly&& a, IPoly&& b) {
  IPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(std::move(a[i++]));
    } else if (c < 0) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coef += b[j].coef;
      if (a[i].coef != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IPoly leftMultiply(const Ring& ring, const Monomial& m, const IPoly& p) {
  IPoly main;
  main.reserve(p.size());
  if (ring.isCommutative() || !hasDerivation(ring, m)) {
    for (const auto& t : p) main.push_back({m * t.mono, t.coef});
    return main;
  }
  IPoly corrections;
  for (const auto& t : p) {
    bool first = true;
    ring.multiply(m, t.mono, [&](const Monomial& mono, const BigInt& c) {
      if (first) {
        main.push_back({mono, t.coef});
        first = false;
      } else {
        corrections.push_back({mono, c * t.coef});
      }
    });
  }
  if (corrections.empty()) return main;
  sortAndMerge(ring, corrections);
  return mergeAdd(ring, std::move(main), std::move(corrections));
}

IPoly combine(const Ring& ring, const BigInt& a, std::span<const ITerm> p, const BigInt& b,
              std::span<const ITerm> q) {
  IPoly out;
  out.reserve(p.size() + q.size());
  const bool aOne = a == 1, bOne = b == 1;
  std::size_t i = 0, j = 0;
  BigInt tmp;
  while (i < p.size() || j < q.size()) {
    int c = i == p.size() ? -1 : j == q.size() ? 1 : ring.compare(p[i].mono, q[j].mono);
    if (c > 0) {
      out.push_back({p[i].mono, aOne ? p[i].coef : BigInt(a * p[i].coef)});
      ++i;
    } else if (c < 0) {
      out.push_back({q[j].mono, bOne ? BigInt(-q[j].coef) : BigInt(-(b * q[j].coef))});
      ++j;
    } else {
      tmp = a * p[i].coef;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), q[j].coef.get_mpz_t());
      if (tmp != 0) out.push_back({p[i].mono, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

BigInt content(std::span<const ITerm> p) {
  BigInt g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt makePrimitive(IPoly& p) {
  if (p.empty()) return 1;
  BigInt g = content(p);
  if (p.front().coef < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  return g;
}

bool isHomogeneous(const IPoly& p) {
  for (const auto& t : p)
    if (t.mono.degree != p.front().mono.degree) return false;
  return true;
}

unsigned maxDegree(const IPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max<unsigned>(d, t.mono.degree);
  return d;
}

void ReducerSet::add(const IPoly* p) {
  polys_.push_back(p);
  leads_.push_back(p->front().mono);
}

std::optional<std::size_t> ReducerSet::find(const Monomial& m) const {
  std::optional<std::size_t> best;
  const std::size_t n = ring_->size();
  for (std::size_t i = 0; i < leads_.size(); ++i) {
    if (!divides(leads_[i], m, n)) continue;
    if (!best || polys_[i]->size() < polys_[*best]->size()) best = i;
  }
  return best;
}

IPoly reduce(const Ring& ring, IPoly p, const ReducerSet& reducers, bool full, Rational* scale) {
  IPoly rem;
  BigInt mult = 1, removed = 1;
  std::size_t head = 0, steps = 0;
  const std::size_t n = ring.size();
  while (head < p.size()) {
    std::optional<std::size_t> r = reducers.find(p[head].mono);
    if (!r) {
      if (!full) break;
      rem.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    const IPoly& g = reducers[*r];
    Monomial q = quotient(p[head].mono, g.front().mono, n);
    IPoly mg = leftMultiply(ring, q, g);
    BigInt gg;
    mpz_gcd(gg.get_mpz_t(), p[head].coef.get_mpz_t(), mg.front().coef.get_mpz_t());
    BigInt a = mg.front().coef / gg, b = p[head].coef / gg;
    p = combine(ring, a, std::span<const ITerm>(p).subspan(head + 1), b, std::span<const ITerm>(mg).subspan(1));
    head = 0;
    if (a != 1) {
      for (auto& t : rem) t.coef *= a;
      mult *= a;
    }
    if (++steps % 16 == 0) {
      BigInt c = content(p);
      if (c != 1 && c != 0) {
        for (const auto& t : rem) {
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coef.get_mpz_t());
          if (c == 1) break;
        }
      }
      if (c != 1 && c != 0) {
        for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
        for (auto& t : rem) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
        removed *= c;
      }
    }
  }
  for (std::size_t i = head; i < p.size(); ++i) rem.push_back(std::move(p[i]));
  BigInt c = content(rem);
  if (c != 0 && c != 1) {
    for (auto& t : rem) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    removed *= c;
  }
  if (scale) *scale = makeRational(mult, removed);
  return rem;
}

namespace {

struct Element {
  IPoly poly;
  Monomial lead;
  unsigned sugar;
  bool generatesPairs = true;
};

struct Pair {
  std::size_t i, j;  // j == npos: input generator i
  Monomial lcm;
  unsigned sugar;
};

constexpr std::size_t kGenerator = std::numeric_limits<std::size_t>::max();

}  // namespace

std::vector<IPoly> buchberger(const Ring& ring, std::vector<IPoly> gens, const GBOptions& options, GBStats* stats) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::size_t n = ring.size();
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const IPoly& p) { return p.empty(); }), gens.end());

  bool module = false, homogeneous = true;
  for (const auto& g : gens) {
    homogeneous = homogeneous && isHomogeneous(g);
    for (const auto& t : g) module = module || t.mono.component != 0;
  }
  if (!homogeneous && !ring.order().isGlobal(n))
    throw PreconditionError("non-global monomial order on inhomogeneous input: " + ring.order().describe());
  const bool productCriterion = ring.isCommutative() && !module;

  std::vector<Element> basis;
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    makePrimitive(gens[i]);
    pairs.push_back({i, kGenerator, gens[i].front().mono, maxDegree(gens[i])});
  }
  ReducerSet reducers(ring);
  // Basis polynomials are referenced by pointer from the reducer set.
  std::vector<std::unique_ptr<IPoly>> storage;

  GBStats local;
  auto addElement = [&](IPoly h, unsigned sugar) {
    const std::size_t k = basis.size();
    Monomial lk = h.front().mono;
    // New pairs (i, k) with the Gebauer–Möller criteria.
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      if (!basis[i].generatesPairs || basis[i].lead.component != lk.component) continue;
      cands.push_back({i, lcm(basis[i].lead, lk, n), productCriterion && coprime(basis[i].lead, lk, n)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
          drop = divides(cands[b].lcm, cands[a].lcm, n);
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) drop = divides(kept[b].lcm, cands[a].lcm, n);
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // Chain criterion on old pairs.
    std::vector<Pair> survivors;
    survivors.reserve(pairs.size());
    for (auto& p : pairs) {
      if (p.j != kGenerator && divides(lk, p.lcm, n)) {
        Monomial lik = lcm(basis[p.i].lead, lk, n), ljk = lcm(basis[p.j].lead, lk, n);
        if (lik != p.lcm && ljk != p.lcm) continue;
      }
      survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    for (const auto& c : kept) {
      if (c.coprime) continue;
      const Element& e = basis[c.i];
      unsigned s1 = e.sugar + (c.lcm.degree - e.lead.degree);
      unsigned s2 = sugar + (c.lcm.degree - lk.degree);
      pairs.push_back({c.i, k, c.lcm, std::max(s1, s2)});
    }
    for (auto& e : basis)
      if (e.generatesPairs && divides(lk, e.lead, n)) e.generatesPairs = false;
    basis.push_back({h, lk, sugar, true});
    storage.push_back(std::make_unique<IPoly>(std::move(h)));
    reducers.add(storage.back().get());
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const Pair& a = pairs[p];
      const Pair& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && ring.compare(a.lcm, b.lcm) < 0)) best = p;
    }
    Pair pair = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    ++local.pairsConsidered;

    IPoly s;
    if (pair.j == kGenerator) {
      s = std::move(gens[pair.i]);
    } else {
      const Element& ei = basis[pair.i];
      const Element& ej = basis[pair.j];
      IPoly fi = leftMultiply(ring, quotient(pair.lcm, ei.lead, n), *storage[pair.i]);
      IPoly fj = leftMultiply(ring, quotient(pair.lcm, ej.lead, n), *storage[pair.j]);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), fi.front().coef.get_mpz_t(), fj.front().coef.get_mpz_t());
      BigInt a = fj.front().coef / g, b = fi.front().coef / g;
      s = combine(ring, a, std::span<const ITerm>(fi).subspan(1), b, std::span<const ITerm>(fj).subspan(1));
    }
    ++local.pairsReduced;
    if (options.maxReductions && local.pairsReduced > options.maxReductions)
      throw IterationCapExceeded("Gröbner basis computation exceeded " + std::to_string(options.maxReductions) +
                                     " reductions",
                                 {});
    IPoly h = reduce(ring, std::move(s), reducers, options.tailReduce);
    if (h.empty()) {
      ++local.zeroReductions;
      continue;
    }
    makePrimitive(h);
    unsigned sugar = std::max(pair.sugar, maxDegree(h));
    addElement(std::move(h), sugar);
    if (options.trace && basis.size() % 50 == 0)
      options.trace("gb: " + std::to_string(basis.size()) + " elements, " + std::to_string(pairs.size()) +
                    " pairs pending, degree " + std::to_string(sugar));
  }

  std::vector<IPoly> result;
  result.reserve(storage.size());
  for (auto& p : storage) result.push_back(std::move(*p));
  if (options.reduced) result = reduceBasis(ring, std::move(result));
  local.basisSize = result.size();
  local.elapsedMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (options.trace)
    options.trace("gb: done, " + std::to_string(local.basisSize) + " elements, " +
                  std::to_string(local.pairsReduced) + " reductions (" + std::to_string(local.zeroReductions) +
                  " to zero), " + std::to_string(long(local.elapsedMs)) + " ms");
  if (stats) *stats = local;
  return result;
}

std::vector<IPoly> reduceBasis(const Ring& ring, std::vector<IPoly> basis) {
  const std::size_t n = ring.size();
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const IPoly& p) { return p.empty(); }), basis.end());
  std::sort(basis.begin(), basis.end(),
            [&](const IPoly& a, const IPoly& b) { return ring.compare(a.front().mono, b.front().mono) < 0; });
  std::vector<IPoly> minimal;
  for (auto& p : basis) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (divides(q.front().mono, p.front().mono, n)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    // Under a non-global order a tail term may be a multiple of the element's own
    // leading monomial, so the element itself takes part in reducing its tail.
    ReducerSet others(ring);
    for (std::size_t j = 0; j < minimal.size(); ++j) others.add(&minimal[j]);
    IPoly head{minimal[i].front()};
    IPoly tail(minimal[i].begin() + 1, minimal[i].end());
    Rational scale;
    IPoly reducedTail = reduce(ring, std::move(tail), others, true, &scale);
    // head*scale + reducedTail, cleared to integers.
    BigInt num = scale.get_num(), den = scale.get_den();
    IPoly out;
    out.reserve(reducedTail.size() + 1);
    out.push_back({head.front().mono, head.front().coef * num});
    for (auto& t : reducedTail) out.push_back({t.mono, t.coef * den});
    makePrimitive(out);
    minimal[i] = std::move(out);
  }
  return minimal;
}

}  // namespace dmod::engine

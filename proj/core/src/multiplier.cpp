#include "dmod/multiplier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <unordered_map>

#include "dmod/bfunction.hpp"
#include "dmod/commutative.hpp"
#include "dmod/errors.hpp"
#include "dmod/linear_algebra.hpp"
#include "dmod/local_bfunction.hpp"

namespace dmod {

namespace {

long elapsedMs(std::chrono::steady_clock::time_point since) {
  return long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count());
}

BigInt ceiling(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt floorOf(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::vector<Polynomial> unitIdeal(const RingPtr& ring) { return {Polynomial::constant(ring, 1)}; }

// Sum of c_k sigma^k.
Polynomial evaluateAt(const BPoly& b, const Polynomial& sigma) {
  Polynomial power = Polynomial::constant(sigma.ring(), 1), out(sigma.ring());
  for (const auto& c : b.coefficients()) {
    out += power * c;
    power = power * sigma;
  }
  return out;
}

}  // namespace

MultiplierSession::MultiplierSession(std::vector<Polynomial> f, Options options)
    : f_(minimalGenerators(normalizedGenerators(f, "multiplier ideal"))),
      options_(std::move(options)),
      D_(f_.front().ring(), f_.size()),
      xs_(detail::appendVariable(f_.front().ring(), "s")) {}

const std::vector<Polynomial>& MultiplierSession::star() {
  if (!star_) star_ = starOfIf(D_, f_, options_);
  return *star_;
}

const MultiplierSession::Model& MultiplierSession::model() {
  if (model_) return *model_;
  const std::size_t n = D_.n();
  Model m;
  if (D_.r() == 1) {
    // The weight-zero part of I_f* + D_Y f^m is Ann f^s + D_X[sigma] f^m.
    auto start = std::chrono::steady_clock::now();
    auto ann = annFs(f_.front(), options_);
    options_.note("annihilator of f^s: " + std::to_string(ann.generators.size()) + " generators, " +
                  std::to_string(elapsedMs(start)) + " ms");
    m.ring = ann.ring;
    m.base = std::move(ann.generators);
    m.sigma = Polynomial::variable(ann.ring, ann.s);
    m.sIndex = ann.s;
    for (std::size_t i = 0; i < n; ++i) m.dx.push_back(n + i);
  } else {
    m.ring = D_.ring();
    m.base = star();
    m.sigma = D_.sigma();
    for (std::size_t i = 0; i < n; ++i) m.dx.push_back(D_.dx(i));
  }
  model_ = std::move(m);
  return *model_;
}

std::vector<Polynomial> MultiplierSession::withPowers(const std::vector<Polynomial>& base, unsigned m) {
  auto gens = base;
  const RingPtr& ring = base.front().ring();
  auto map = detail::identityMap(D_.n());
  for (const auto& p : powersOfDegree(f_, m)) gens.push_back(p.mapTo(ring, map));
  return gens;
}

const std::vector<Polynomial>& MultiplierSession::laBasis(unsigned m) {
  auto it = la_.find(m);
  if (it == la_.end()) {
    auto start = std::chrono::steady_clock::now();
    it = la_.emplace(m, weylGB(withPowers(model().base, m), options_.gb())).first;
    options_.note("Groebner basis of I_f* + <f>^" + std::to_string(m) + ": " + std::to_string(it->second.size()) +
                  " elements, " + std::to_string(elapsedMs(start)) + " ms");
  }
  return it->second;
}

const BPoly& MultiplierSession::bm(unsigned m) {
  auto it = bm_.find(m);
  if (it == bm_.end()) {
    const auto& basis = laBasis(m);
    auto b = linearAlgebraTrickWithBasis(Polynomial::constant(model().ring, 1), basis, model().sigma, options_);
    it = bm_.emplace(m, std::move(b)).first;
  }
  return it->second;
}

Threshold MultiplierSession::lct() {
  if (!lct_) lct_ = minimalNegatedRoot(bm(1));
  return *lct_;
}

unsigned MultiplierSession::mFor(const Rational& c) {
  auto l = lct();
  if (!l) return 1;
  Rational diff = c - *l;
  BigInt m = ceiling(diff > 1 ? diff : Rational(1));
  if (diff >= 1 && diff.get_den() == 1) m += 1;
  if (!m.fits_uint_p()) throw PreconditionError("multiplier ideal: c is too large");
  return unsigned(m.get_ui());
}

const std::vector<Polynomial>& MultiplierSession::jIdeal(unsigned m) {
  auto it = j_.find(m);
  if (it != j_.end()) return it->second;
  auto start = std::chrono::steady_clock::now();
  const std::size_t n = D_.n();
  std::vector<Polynomial> out;
  JRoute route = route_;
  if (route == JRoute::Automatic) route = D_.r() == 1 ? JRoute::Annihilator : JRoute::Elimination;
  if (route != JRoute::Elimination && D_.r() != 1)
    throw PreconditionError("J_f(m): this route needs exactly one generator");
  if (route == JRoute::Annihilator) {
    const Model& mod = model();
    std::vector<int> map(mod.ring->size(), -1);
    for (std::size_t i = 0; i < n; ++i) map[i] = int(i);
    map[mod.sIndex] = int(n);
    for (const auto& p : weylEliminate(withPowers(mod.base, m), mod.dx, options_.gb())) out.push_back(p.mapTo(xs_, map));
  } else if (route == JRoute::Psi) {
    std::vector<std::size_t> dxs;
    for (std::size_t i = 0; i < n; ++i) dxs.push_back(D_.dx(i));
    out = psiImagesInXS(D_, weylEliminate(withPowers(star(), m), dxs, options_.gb()), xs_);
  } else {
    WeylAlgebra Ds = D_.withExtras({"s"});
    auto into = D_.mapInto(Ds);
    const std::size_t s = Ds.extra(D_.extraCount());
    std::vector<Polynomial> gens;
    for (const auto& p : withPowers(star(), m)) gens.push_back(p.mapTo(Ds.ring(), into));
    gens.push_back(Ds.variable(s) - Ds.sigma());
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(Ds.dx(i));
    for (std::size_t j = 0; j < D_.r(); ++j) {
      vars.push_back(Ds.t(j));
      vars.push_back(Ds.dt(j));
    }
    std::vector<int> map(Ds.ring()->size(), -1);
    for (std::size_t i = 0; i < n; ++i) map[Ds.x(i)] = int(i);
    map[s] = int(n);
    for (const auto& p : weylEliminate(gens, vars, options_.gb())) out.push_back(p.mapTo(xs_, map));
  }
  static const char* names[] = {"automatic", "annihilator", "psi", "elimination"};
  options_.note("J_f(" + std::to_string(m) + ") in K[x,s] via " + names[int(route)] + ": " +
                std::to_string(out.size()) + " generators, " + std::to_string(elapsedMs(start)) + " ms");
  return j_.emplace(m, std::move(out)).first->second;
}

BPoly MultiplierSession::bPrime(unsigned m, const Rational& c) {
  return bm(m).filtered([&](const Rational& root) { return -root > c; });
}

MultiplierIdealResult MultiplierSession::ideal(const Rational& c) {
  if (c < 0) throw PreconditionError("multiplier ideal: c must be nonnegative");
  const RingPtr& ring = f_.front().ring();
  MultiplierIdealResult out;
  if (c == 0 || !lct()) {
    out.generators = unitIdeal(ring);
    out.m = 1;
    return out;
  }
  out.m = mFor(c);
  BPoly b = bPrime(out.m, c);
  auto key = std::to_string(out.m) + ":" + b.expandedString();
  auto it = ideals_.find(key);
  if (it == ideals_.end()) {
    const std::size_t n = D_.n();
    std::vector<int> down(n + 1, -1);
    for (std::size_t i = 0; i < n; ++i) down[i] = int(i);
    std::vector<Polynomial> E;
    for (const auto& e : exceptionalLocusCore(jIdeal(out.m), n, b, options_)) E.push_back(e.mapTo(ring, down));
    it = ideals_.emplace(key, gb(E, options_.gb())).first;
  }
  out.generators = it->second;
  return out;
}

MultiplierIdealResult MultiplierSession::idealLA(const Rational& c, std::optional<unsigned> dmaxIn) {
  if (c < 0) throw PreconditionError("multiplier ideal: c must be nonnegative");
  const RingPtr& ring = f_.front().ring();
  MultiplierIdealResult out;
  if (!lct()) {
    out.generators = unitIdeal(ring);
    out.m = 1;
    return out;
  }
  unsigned dmax = 0;
  if (dmaxIn) {
    dmax = *dmaxIn;
  } else {
    for (const auto& p : f_) dmax = std::max(dmax, unsigned(p.totalDegree()));
    dmax *= 2;
  }
  out.m = mFor(c);
  const auto& basis = laBasis(out.m);
  const Model& mod = model();
  const std::size_t n = D_.n();
  // For one generator J(f^c) lies in J(f^k) = <f^k>, k = floor(c), so the
  // search runs over (J(f^c) : f^k) with seed f^k b'(sigma).
  Polynomial factor = Polynomial::constant(ring, 1);
  if (D_.r() == 1)
    for (BigInt k = floorOf(c); k > 0; --k) factor = factor * f_.front();
  const Polynomial bSigma = factor.mapTo(mod.ring, detail::identityMap(n)) * evaluateAt(bPrime(out.m, c), mod.sigma);
  auto grevlex = ring->withOrder(MonomialOrder::degrevlex());

  // NF(x^a b'(sigma)), built from NF(x^(a - e_i) b'(sigma)) by left multiplication with x_i.
  std::unordered_map<Monomial, Polynomial, MonomialHash> nfs;
  std::function<const Polynomial&(const Monomial&)> nfOf = [&](const Monomial& a) -> const Polynomial& {
    auto it = nfs.find(a);
    if (it != nfs.end()) return it->second;
    Polynomial value(mod.ring);
    if (a.isOne()) {
      value = nf(bSigma, basis);
    } else {
      std::size_t i = 0;
      while (a.exp[i] == 0) ++i;
      Monomial prev = a;
      prev.set(i, Exponent(a.exp[i] - 1));
      value = nf(Polynomial::variable(mod.ring, i) * nfOf(prev), basis);
    }
    return nfs.emplace(a, std::move(value)).first->second;
  };
  auto inLeadIdeal = [&](const Monomial& a, const std::vector<Polynomial>& gbP) {
    for (const auto& g : gbP)
      if (divides(g.leadMonomial(), a, n)) return true;
    return false;
  };

  std::vector<Polynomial> P, gbP;
  long d = -1;
  auto closed = [&] { return d >= 0 && containsAllMonomialsOfDegree(gbP, unsigned(d)); };
  auto more = [&] { return (dmax == kUnbounded || d < long(dmax)) && (P.empty() || !closed()); };
  while (more()) {
    ++d;
    // Standard monomials of degree <= d, ascending in grevlex.
    std::vector<Monomial> A;
    for (long e = 0; e <= d; ++e) {
      std::vector<Monomial> level;
      std::function<void(std::size_t, unsigned, Monomial&)> walk = [&](std::size_t i, unsigned left, Monomial& m) {
        if (i + 1 == n) {
          m.exp[i] = Exponent(left);
          m.recompute();
          if (!inLeadIdeal(m, gbP)) level.push_back(m);
          m.exp[i] = 0;
          return;
        }
        for (unsigned a = 0; a <= left; ++a) {
          m.exp[i] = Exponent(a);
          walk(i + 1, left - a, m);
        }
        m.exp[i] = 0;
      };
      Monomial m;
      walk(0, unsigned(e), m);
      std::sort(level.begin(), level.end(),
                [&](const Monomial& x, const Monomial& y) { return grevlex->compare(x, y) < 0; });
      A.insert(A.end(), level.begin(), level.end());
    }
    DependencyFinder finder(mod.ring);
    std::vector<Monomial> accepted;
    std::size_t found = 0;
    for (const auto& a : A) {
      if (auto dep = finder.add(nfOf(a))) {
        Polynomial h = Polynomial::monomial(grevlex, a);
        for (std::size_t j = 0; j < accepted.size(); ++j)
          if ((*dep)[j] != 0) h -= Polynomial::monomial(grevlex, accepted[j], (*dep)[j]);
        P.push_back(std::move(h));
        ++found;
      } else {
        accepted.push_back(a);
      }
    }
    if (found > 0) gbP = gb(P, options_.gb());
    options_.note("linear algebra: degree " + std::to_string(d) + ", " + std::to_string(A.size()) +
                  " standard monomials, " + std::to_string(found) + " relations");
  }
  out.partial = !closed();
  for (const auto& g : gbP) out.generators.push_back(factor * g.reordered(ring));
  if (!out.generators.empty()) out.generators = gb(out.generators, options_.gb());
  return out;
}

JumpingData MultiplierSession::jumping(const Rational& lo, const Rational& hi) {
  if (lo < 0 || !(lo < hi)) throw PreconditionError("jumping coefficients: need 0 <= lo < hi");
  JumpingData out;
  out.lct = lct();
  if (!out.lct) return out;
  const Rational l = *out.lct;
  unsigned m = 1;
  if (hi >= l) {
    BigInt k = floorOf(hi - l) + 1;
    if (!k.fits_uint_p()) throw PreconditionError("jumping coefficients: interval too long");
    m = unsigned(k.get_ui());
  }
  std::vector<Rational> roots;
  for (const auto& r : bm(m).negatedRoots())
    if (r >= l && r < l + Rational(long(m))) roots.push_back(r);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Rational& xi = roots[k];
    if (!(lo < xi && xi <= hi)) continue;
    Rational before = k == 0 ? Rational(xi / 2) : Rational((roots[k - 1] + xi) / 2);
    bool jump = k == 0 || !idealEquals(ideal(xi).generators, ideal(before).generators);
    (jump ? out.jumps : out.rejected).push_back(xi);
  }
  for (std::size_t k = 0; k < out.jumps.size(); ++k) {
    JumpPiece piece{out.jumps[k], std::nullopt, ideal(out.jumps[k]).generators};
    if (k + 1 < out.jumps.size()) piece.to = out.jumps[k + 1];
    out.ideals.push_back(std::move(piece));
  }
  return out;
}

Threshold lct(const std::vector<Polynomial>& f, const Options& options) {
  return MultiplierSession(f, options).lct();
}

std::vector<Polynomial> multiplierIdeal(const std::vector<Polynomial>& f, const Rational& c, const Options& options) {
  return MultiplierSession(f, options).ideal(c).generators;
}

MultiplierIdealResult multiplierIdealLA(const std::vector<Polynomial>& f, const Rational& c,
                                        std::optional<unsigned> dmax, const Options& options) {
  return MultiplierSession(f, options).idealLA(c, dmax);
}

JumpingData jumpingCoefficients(const std::vector<Polynomial>& f, const Rational& lo, const Rational& hi,
                                const Options& options) {
  return MultiplierSession(f, options).jumping(lo, hi);
}

}  // namespace dmod

#include "dmod/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

void normalizeTerms(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

std::vector<Term> mergeAdd(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                           bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalizeTerms(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw PreconditionError("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }

long Polynomial::totalDegree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree);
  return d;
}

long Polynomial::degreeIn(std::size_t var) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.exp[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exp[var] != 0; });
}

bool Polynomial::isHomogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree == terms_.front().mono.degree; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

void requireSameRing(const Polynomial& a, const Polynomial& b, const char* what) {
  if (!a.ring() || !b.ring()) throw RingMismatch(std::string(what) + ": polynomial without ring");
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw RingMismatch(std::string(what) + ": operands live in different rings");
}

void requireSameRing(const std::vector<Polynomial>& ps, const char* what) {
  for (std::size_t i = 1; i < ps.size(); ++i) requireSameRing(ps[0], ps[i], what);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b, "addition");
  Polynomial r(a.ring_);
  r.terms_ = mergeAdd(*a.ring_, a.terms_, b.terms_, false);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b, "subtraction");
  Polynomial r(a.ring_);
  r.terms_ = mergeAdd(*a.ring_, a.terms_, b.terms_, true);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b, "multiplication");
  const Ring& ring = *a.ring_;
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Rational c = ta.coef * tb.coef;
      ring.multiply(ta.mono, tb.mono, [&](const Monomial& m, const BigInt& k) {
        terms.push_back({m, Rational(c * k)});
      });
    }
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::leftMultiply(const Monomial& m, const Rational& c) const {
  return monomial(ring_, m, c) * *this;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return *this * Rational(1 / leadCoefficient());
}

Polynomial Polynomial::primitive() const {
  if (isZero()) return *this;
  BigInt lcmDen = 1, g = 0;
  for (const auto& t : terms_) mpz_lcm(lcmDen.get_mpz_t(), lcmDen.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& t : terms_) {
    BigInt v = t.coef.get_num() * (lcmDen / t.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = makeRational(lcmDen, g);
  if (leadCoefficient() < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.mono.exp[var] == 0) continue;
    Monomial m = t.mono;
    m.exp[var]--;
    m.recompute();
    terms.push_back({m, Rational(t.coef * t.mono.exp[var])});
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::topWeightForm(const std::vector<int>& weight) const {
  if (isZero()) return *this;
  auto w = [&](const Monomial& m) {
    long s = 0;
    for (std::size_t i = 0; i < weight.size() && i < ring_->size(); ++i) s += long(weight[i]) * m.exp[i];
    return s;
  };
  long best = w(terms_.front().mono);
  for (const auto& t : terms_) best = std::max(best, w(t.mono));
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (w(t.mono) == best) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::mapTo(const RingPtr& target, const std::vector<int>& varMap) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (i >= varMap.size() || varMap[i] < 0)
        throw RingMismatch("variable " + ring_->name(i) + " has no image in the target ring");
      m.exp[std::size_t(varMap[i])] = static_cast<Exponent>(m.exp[std::size_t(varMap[i])] + t.mono.exp[i]);
    }
    m.recompute();
    terms.push_back({m, t.coef});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
  if (!ring_->sameAlgebra(*target)) throw RingMismatch("reordering into a different algebra");
  std::vector<Term> terms = terms_;
  return Polynomial(target, std::move(terms));
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Rational c = t.coef;
    for (unsigned k = 0; k < t.mono.exp[var]; ++k) c *= value;
    m.exp[var] = 0;
    m.recompute();
    terms.push_back({m, c});
  }
  return Polynomial(ring_, std::move(terms));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

std::string toString(const Monomial& m, const Ring& ring) {
  std::string out;
  // Coordinates before derivations, matching the normal ordering convention.
  auto emitVar = [&](std::size_t i) {
    if (m.exp[i] == 0) return;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  };
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!ring.isDerivation(i)) emitVar(i);
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.isDerivation(i)) emitVar(i);
  return out;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = dmod::toString(t.mono, *ring_);
    if (mono.empty()) {
      out += dmod::toString(c);
    } else {
      if (c != 1) out += dmod::toString(c) + "*";
      out += mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->sameAlgebra(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string formatList(const std::vector<Polynomial>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].toString();
  return out + "}";
}

}  // namespace dmod

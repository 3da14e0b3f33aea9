#include "dmod/univariate.hpp"

#include <algorithm>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

using Coeffs = std::vector<Rational>;  // ascending

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Coeffs& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign(const Rational& q) { return sgn(q); }

Coeffs derivative(const Coeffs& p) {
  Coeffs d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a by b (b nonzero).
Coeffs remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Quotient of a by (s - r), assuming r is a root.
Coeffs deflate(const Coeffs& a, const Rational& r) {
  const std::size_t n = a.size() - 1;
  Coeffs q(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = a[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

Coeffs monicOf(Coeffs p) {
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monicOf(a);
}

Coeffs exactQuotient(Coeffs a, const Coeffs& b) {
  Coeffs q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

// Simplest rational (smallest denominator) in the closed interval [a, b].
Rational simplest(const Rational& a, const Rational& b) {
  if (a <= 0 && b >= 0) return 0;
  if (b < 0) return -simplest(-b, -a);
  Rational fl(floor(a));
  if (fl == a) return a;
  if (fl + 1 <= b) return fl + 1;
  Rational inner = simplest(1 / (b - fl), 1 / (a - fl));
  return fl + 1 / inner;
}

class Sturm {
 public:
  explicit Sturm(const Coeffs& p) {
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (!chain_.back().empty()) {
      Coeffs r = remainder(chain_[chain_.size() - 2], chain_.back());
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      chain_.push_back(std::move(r));
    }
  }
  // Number of sign changes at x (zeros skipped).
  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sign(eval(q, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

 private:
  std::vector<Coeffs> chain_;
};

struct Isolator {
  const Coeffs& p;
  const Sturm& sturm;
  Rational maxWidth;
  std::vector<Rational> found;

  // Roots in (a, b], `count` of them.
  void isolate(const Rational& a, const Rational& b, int count) {
    if (count == 0) return;
    if (count == 1) {
      refine(a, b);
      return;
    }
    Rational mid = (a + b) / 2;
    int left = sturm.variations(a) - sturm.variations(mid);
    isolate(a, mid, left);
    isolate(mid, b, count - left);
  }

  void refine(Rational a, Rational b) {
    if (eval(p, b) == 0) {
      found.push_back(b);
      return;
    }
    int sa = sign(eval(p, a));
    // a itself may be a (different, already counted) root; p then takes the sign of p'(a) just right of it.
    if (sa == 0) sa = sign(eval(derivative(p), a));
    while (b - a >= maxWidth) {
      Rational mid = (a + b) / 2;
      int sm = sign(eval(p, mid));
      if (sm == 0) {
        found.push_back(mid);
        return;
      }
      if (sm == sa) a = mid;
      else b = mid;
    }
    Rational c = simplest(a, b);
    if (c != a && eval(p, c) == 0) found.push_back(c);
  }
};

// Rational roots of a square-free polynomial with p(0) != 0.
std::vector<Rational> squareFreeRoots(const Coeffs& p) {
  if (p.size() <= 1) return {};
  // Primitive integer leading coefficient bounds root denominators.
  BigInt den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  BigInt lead = abs(Rational(p.back() * den).get_num());
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt v = Rational(c * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  lead /= g;
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rational(abs(p[i] / p.back())));
  bound += 1;
  Sturm sturm(p);
  Isolator iso{p, sturm, makeRational(1, 2 * lead * lead), {}};
  Rational lo = -bound;
  iso.isolate(lo, bound, sturm.variations(lo) - sturm.variations(bound));
  return iso.found;
}

bool byAbsThenValue(const RootMultiplicity& a, const RootMultiplicity& b) {
  int c = cmp(abs(a.root), abs(b.root));
  if (c != 0) return c < 0;
  return a.root < b.root;
}

std::string factor(const Rational& root, unsigned mult) {
  std::string base;
  if (root == 0) base = "s";
  else if (root < 0) base = "(s+" + dmod::toString(Rational(-root)) + ")";
  else base = "(s-" + dmod::toString(root) + ")";
  if (mult > 1) base += "^" + std::to_string(mult);
  return base;
}

}  // namespace

RationalRootResult rationalRoots(const std::vector<Rational>& coefficients) {
  Coeffs p = coefficients;
  trim(p);
  if (p.empty()) throw PreconditionError("rationalRoots: zero polynomial");
  RationalRootResult out;
  unsigned zeros = 0;
  while (p.front() == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros) out.roots.push_back({Rational(0), zeros});
  p = monicOf(p);
  if (p.size() > 1) {
    Coeffs sqfree = exactQuotient(p, gcd(p, derivative(p)));
    for (const auto& r : squareFreeRoots(monicOf(sqfree))) {
      unsigned mult = 0;
      while (p.size() > 1 && eval(p, r) == 0) {
        p = deflate(p, r);
        ++mult;
      }
      out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), byAbsThenValue);
  out.residual = p;
  return out;
}

RationalRootResult rationalRoots(const Polynomial& p, std::size_t var) {
  if (p.isZero()) throw PreconditionError("rationalRoots: zero polynomial");
  Coeffs c(static_cast<std::size_t>(p.degreeIn(var)) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.degree != t.mono[var])
      throw PreconditionError("rationalRoots: polynomial is not univariate in " + p.ring()->name(var));
    c[t.mono[var]] += t.coef;
  }
  return rationalRoots(c);
}

BPoly::BPoly() : coeffs_{Rational(1)} {}

BPoly BPoly::fromCoefficients(std::vector<Rational> ascending) {
  trim(ascending);
  if (ascending.empty()) throw NotABFunction("zero polynomial is not a b-function");
  auto rr = rationalRoots(ascending);
  if (rr.residual.size() != 1) {
    std::string residual;
    for (std::size_t i = rr.residual.size(); i-- > 0;) {
      if (rr.residual[i] == 0) continue;
      if (!residual.empty()) residual += " + ";
      residual += "(" + dmod::toString(rr.residual[i]) + ")*s^" + std::to_string(i);
    }
    throw NotABFunction("polynomial does not split over Q; residual factor " + residual);
  }
  BPoly b;
  b.coeffs_ = monicOf(std::move(ascending));
  b.roots_ = std::move(rr.roots);
  return b;
}

BPoly BPoly::fromRoots(std::vector<RootMultiplicity> roots) {
  Coeffs p{Rational(1)};
  std::vector<RootMultiplicity> merged;
  for (const auto& r : roots) {
    if (r.multiplicity == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.root == r.root; });
    if (it == merged.end()) merged.push_back(r);
    else it->multiplicity += r.multiplicity;
    for (unsigned k = 0; k < r.multiplicity; ++k) {
      Coeffs q(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= r.root * p[i];
      }
      p = std::move(q);
    }
  }
  std::sort(merged.begin(), merged.end(), byAbsThenValue);
  BPoly b;
  b.coeffs_ = std::move(p);
  b.roots_ = std::move(merged);
  return b;
}

unsigned BPoly::multiplicity(const Rational& root) const {
  for (const auto& r : roots_)
    if (r.root == root) return r.multiplicity;
  return 0;
}

Rational BPoly::evaluate(const Rational& s) const { return eval(coeffs_, s); }

bool BPoly::divides(const BPoly& other) const {
  return std::all_of(roots_.begin(), roots_.end(),
                     [&](const RootMultiplicity& r) { return other.multiplicity(r.root) >= r.multiplicity; });
}

BPoly BPoly::withoutRoot(const Rational& root) const {
  auto roots = roots_;
  auto it = std::find_if(roots.begin(), roots.end(), [&](const auto& r) { return r.root == root; });
  if (it == roots.end()) throw PreconditionError("withoutRoot: " + dmod::toString(root) + " is not a root");
  if (--it->multiplicity == 0) roots.erase(it);
  return fromRoots(std::move(roots));
}

std::vector<Rational> BPoly::negatedRoots() const {
  std::vector<Rational> out;
  for (const auto& r : roots_) out.push_back(-r.root);
  std::sort(out.begin(), out.end());
  return out;
}

std::string BPoly::toString() const {
  if (roots_.empty()) return "1";
  std::string out;
  for (const auto& r : roots_) out += factor(r.root, r.multiplicity);
  return out;
}

std::string BPoly::expandedString() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
    Rational mag = abs(c);
    std::string body;
    if (mono.empty()) body = dmod::toString(mag);
    else if (mag == 1) body = mono;
    else body = dmod::toString(mag) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? "-" : "+") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace dmod

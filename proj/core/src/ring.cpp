#include "dmod/ring.hpp"

#include <set>
#include <sstream>

#include "dmod/errors.hpp"

namespace dmod {

Ring::Ring(std::vector<std::string> names, MonomialOrder order, std::vector<WeylPair> pairs,
           std::optional<std::size_t> homogenizer)
    : names_(std::move(names)), pairs_(std::move(pairs)), homogenizer_(homogenizer) {
  if (names_.size() > kMaxVars)
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw PreconditionError("variable names must be pairwise distinct");
  order_ = order.resized(names_.size());
  partner_.assign(names_.size(), -1);
  isDerivation_.assign(names_.size(), false);
  for (const auto& p : pairs_) {
    if (p.coordinate >= names_.size() || p.derivation >= names_.size() || p.coordinate == p.derivation)
      throw PreconditionError("invalid Weyl pair");
    if (partner_[p.coordinate] != -1 || partner_[p.derivation] != -1)
      throw PreconditionError("variable used in two Weyl pairs");
    partner_[p.coordinate] = int(p.derivation);
    partner_[p.derivation] = int(p.coordinate);
    isDerivation_[p.derivation] = true;
  }
  if (homogenizer_ && (*homogenizer_ >= names_.size() || partner_[*homogenizer_] != -1))
    throw PreconditionError("invalid homogenizing variable");
}

std::optional<std::size_t> Ring::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Ring::partner(std::size_t var) const {
  if (partner_[var] < 0) return std::nullopt;
  return std::size_t(partner_[var]);
}

bool Ring::isDerivation(std::size_t var) const { return isDerivation_[var]; }

std::shared_ptr<const Ring> Ring::withOrder(MonomialOrder order) const {
  return std::make_shared<Ring>(names_, std::move(order), pairs_, homogenizer_);
}

bool Ring::needsReordering(const Monomial& a, const Monomial& b) const {
  for (const auto& p : pairs_)
    if (a.exp[p.derivation] != 0 && b.exp[p.coordinate] != 0) return true;
  return false;
}

// d^a x^b = sum_k C(a,k) b!/(b-k)! x^(b-k) d^(a-k) (H^(2k)), applied independently per pair.
void Ring::expandCorrections(const Monomial& a, const Monomial& b,
                             const std::function<void(const Monomial&, const BigInt&)>& emit) const {
  struct Active {
    std::size_t coord, deriv;
    unsigned kmax;
    std::vector<BigInt> coeff;  // coeff[k] = C(da,k) * falling(xb,k)
  };
  std::vector<Active> active;
  for (const auto& p : pairs_) {
    unsigned da = a.exp[p.derivation], xb = b.exp[p.coordinate];
    if (da == 0 || xb == 0) continue;
    Active act{p.coordinate, p.derivation, std::min(da, xb), {}};
    act.coeff.resize(act.kmax + 1);
    BigInt binom = 1, falling = 1;
    act.coeff[0] = 1;
    for (unsigned k = 1; k <= act.kmax; ++k) {
      binom = binom * (da - k + 1) / k;
      falling *= (xb - k + 1);
      act.coeff[k] = binom * falling;
    }
    active.push_back(std::move(act));
  }
  const Monomial base = a * b;
  std::vector<unsigned> k(active.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < k.size() && k[i] == active[i].kmax) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
    Monomial m = base;
    BigInt c = 1;
    unsigned total = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      m.exp[active[j].coord] = static_cast<Exponent>(m.exp[active[j].coord] - k[j]);
      m.exp[active[j].deriv] = static_cast<Exponent>(m.exp[active[j].deriv] - k[j]);
      c *= active[j].coeff[k[j]];
      total += k[j];
    }
    if (homogenizer_) {
      unsigned e = unsigned(m.exp[*homogenizer_]) + 2 * total;
      if (e > 0xFFFF) throw Error("exponent overflow");
      m.exp[*homogenizer_] = static_cast<Exponent>(e);
    }
    m.recompute();
    m.component = base.component;
    emit(m, c);
  }
}

bool Ring::sameAlgebra(const Ring& other) const {
  return names_ == other.names_ && pairs_ == other.pairs_ && homogenizer_ == other.homogenizer_;
}

std::string Ring::describe() const {
  std::ostringstream out;
  out << "QQ[";
  for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
  out << "]";
  if (!pairs_.empty()) {
    out << " weyl{";
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      out << (i ? "," : "") << names_[pairs_[i].derivation] << "*" << names_[pairs_[i].coordinate];
    out << "}";
  }
  if (homogenizer_) out << " homogenized by " << names_[*homogenizer_];
  out << " order " << order_.describe();
  return out.str();
}

RingPtr makeRing(std::vector<std::string> names, MonomialOrder order, std::vector<WeylPair> pairs,
                 std::optional<std::size_t> homogenizer) {
  return std::make_shared<Ring>(std::move(names), std::move(order), std::move(pairs), homogenizer);
}

}  // namespace dmod

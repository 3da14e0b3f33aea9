#include "dmod/monomial.hpp"

#include <algorithm>

#include "dmod/errors.hpp"

namespace dmod {

void Monomial::set(std::size_t i, Exponent e) {
  exp[i] = e;
  recompute();
}

void Monomial::recompute() {
  degree = 0;
  support = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    degree += exp[i];
    if (exp[i] != 0 && i < 32) support |= (1u << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 0xFFFF) throw Error("exponent overflow");
    r.exp[i] = static_cast<Exponent>(e);
  }
  r.degree = a.degree + b.degree;
  r.support = a.support | b.support;
  r.component = static_cast<std::uint16_t>(a.component + b.component);
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a, std::size_t nvars) {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i) r.exp[i] = static_cast<Exponent>(b.exp[i] - a.exp[i]);
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::size_t nvars) {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.recompute();
  r.component = a.component;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if ((a.support & b.support) != 0) return false;
  for (std::size_t i = 32; i < nvars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = m.component * 0x9E3779B97F4A7C15ull;
  for (std::size_t i = 0; i < kMaxVars; ++i) h = (h ^ m.exp[i]) * 0x100000001B3ull;
  return h;
}

}  // namespace dmod

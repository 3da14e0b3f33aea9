#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace dmod {

inline constexpr std::size_t kMaxVars = 24;
using Exponent = std::uint16_t;

/// Exponent vector with an optional free-module component index.
/// Entries past the ring's variable count are always zero, so equality and
/// hashing may look at the whole array.
struct Monomial {
  std::array<Exponent, kMaxVars> exp{};
  std::uint32_t degree = 0;
  std::uint32_t support = 0;  // bit i set iff exp[i] > 0 (first 32 vars)
  std::uint16_t component = 0;

  Exponent operator[](std::size_t i) const { return exp[i]; }

  void set(std::size_t i, Exponent e);
  void recompute();

  bool isOne() const { return degree == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.component == b.component && a.degree == b.degree && a.exp == b.exp;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// True iff a | b (same component, exponentwise <=).
inline bool divides(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.component != b.component || a.degree > b.degree || (a.support & ~b.support) != 0) return false;
  for (std::size_t i = 0; i < nvars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a; requires divides(a, b). The result lives in component 0.
Monomial quotient(const Monomial& b, const Monomial& a, std::size_t nvars);
/// Exponentwise max; keeps a's component.
Monomial lcm(const Monomial& a, const Monomial& b, std::size_t nvars);
bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace dmod

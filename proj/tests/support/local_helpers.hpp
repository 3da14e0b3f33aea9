#pragma once

#include <string>
#include <vector>

#include "dmod/local_bfunction.hpp"
#include "helpers.hpp"

namespace testing {

inline dmod::Rational evaluateAt(const dmod::Polynomial& p, const std::vector<dmod::Rational>& point) {
  dmod::Polynomial q = p;
  for (std::size_t i = 0; i < point.size(); ++i) q = q.substitute(i, point[i]);
  return q.isZero() ? dmod::Rational(0) : q.leadCoefficient();
}

inline bool vanishesAt(const std::vector<dmod::Polynomial>& ideal, const std::vector<dmod::Rational>& point) {
  for (const auto& g : ideal)
    if (evaluateAt(g, point) != 0) return false;
  return true;
}

inline bool inStratum(const dmod::Stratum& st, const std::vector<dmod::Rational>& point) {
  if (!vanishesAt(st.closure, point)) return false;
  for (const auto& e : st.excluded)
    if (vanishesAt(e, point)) return false;
  return true;
}

/// Maximal ideal <x_i - a_i> of a rational point.
inline std::vector<dmod::Polynomial> pointIdeal(const dmod::RingPtr& r, const std::vector<dmod::Rational>& point) {
  std::vector<dmod::Polynomial> out;
  for (std::size_t i = 0; i < point.size(); ++i)
    out.push_back(dmod::Polynomial::variable(r, i) - dmod::Polynomial::constant(r, point[i]));
  return out;
}

/// All points of {-k..k}^n.
inline std::vector<std::vector<dmod::Rational>> grid(std::size_t n, long k) {
  std::vector<std::vector<dmod::Rational>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<dmod::Rational>> next;
    for (const auto& p : out)
      for (long a = -k; a <= k; ++a) {
        auto q = p;
        q.push_back(dmod::Rational(a));
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace testing

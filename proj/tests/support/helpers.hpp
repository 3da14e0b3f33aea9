#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "dmod/commutative.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/univariate.hpp"
#include "dmod_cli/parse.hpp"

namespace testing {

inline dmod::RingPtr ring(const std::vector<std::string>& vars) { return dmod::cli::polynomialRing(vars); }

inline dmod::Polynomial poly(const dmod::RingPtr& r, const std::string& text) {
  return dmod::cli::parsePolynomial(text, r);
}

inline std::vector<dmod::Polynomial> polys(const dmod::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<dmod::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(r, t));
  return out;
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<dmod::Polynomial> {
  static String convert(const dmod::Polynomial& p) { return p.toString().c_str(); }
};
template <>
struct StringMaker<std::vector<dmod::Polynomial>> {
  static String convert(const std::vector<dmod::Polynomial>& ps) { return dmod::formatList(ps).c_str(); }
};
template <>
struct StringMaker<dmod::BPoly> {
  static String convert(const dmod::BPoly& b) { return b.toString().c_str(); }
};
}  // namespace doctest

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmod/polynomial.hpp"

namespace dmod::cli {

struct ParsedInput {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
};

/// Ring K[vars] with degrevlex; names must be identifiers and pairwise distinct.
RingPtr polynomialRing(const std::vector<std::string>& vars);

/// Parses one polynomial.
///   expression := ['-'] term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := rational | var ['^' natural] | '(' expression ')' ['^' natural]
/// Throws ParseError with the byte offset of the offending token.
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring);

/// Parses a comma-separated list of polynomials (commas inside parentheses do not split).
ParsedInput parse(std::string_view text, const std::vector<std::string>& vars);

/// Splits "a,b,c" on commas, trimming whitespace; used for --vars.
std::vector<std::string> splitList(std::string_view text);

}  // namespace dmod::cli

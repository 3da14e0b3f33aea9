#pragma once

#include <string>
#include <vector>

#include "dmod/polynomial.hpp"
#include "dmod/univariate.hpp"
#include "json.hpp"

namespace dmod::cli {

/// One CLI invocation's result. JSON schema:
/// {"command", "input", "result", "partial", "warnings", "elapsed_ms"}.
struct OutputRecord {
  std::string command;
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  bool partial = false;
  std::vector<std::string> warnings;
  long elapsed_ms = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json toJson(const OutputRecord& record);
/// Throws ParseError when a field is missing or has the wrong type.
OutputRecord fromJson(const nlohmann::json& j);

/// Human-readable rendering of the result payload (one item per line).
std::string renderText(const OutputRecord& record);

/// Payload pieces shared by the subcommands.
nlohmann::json bpolyJson(const BPoly& b);
/// Generators sorted by decreasing leading monomial.
nlohmann::json idealJson(std::vector<Polynomial> gens);
std::string rationalText(const Rational& q);

}  // namespace dmod::cli

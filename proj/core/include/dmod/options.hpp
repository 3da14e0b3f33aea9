#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "dmod/groebner.hpp"

namespace dmod {

/// Knobs shared by the high-level algorithms.
struct Options {
  /// Largest degree tried by the minimal-polynomial search before giving up.
  std::size_t iterationCap = 50;
  /// Passed to every Gröbner basis computation (0 = unlimited).
  std::size_t maxReductions = 0;
  /// Progress lines (Gröbner basis sizes, timings of the expensive steps).
  std::function<void(const std::string&)> trace;
  /// Non-fatal remarks about the input, e.g. a constant polynomial.
  std::function<void(const std::string&)> warn;

  engine::GBOptions gb() const {
    engine::GBOptions o;
    o.maxReductions = maxReductions;
    o.trace = trace;
    return o;
  }
  void note(const std::string& line) const {
    if (trace) trace(line);
  }
  void warning(const std::string& line) const {
    if (warn) warn(line);
  }
};

}  // namespace dmod

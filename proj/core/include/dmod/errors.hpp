#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or a ring does not fit the operation).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An iterative procedure hit its configured cap before terminating.
/// `partial` carries whatever the loop had produced so far, rendered as text.
class IterationCapExceeded : public Error {
 public:
  IterationCapExceeded(const std::string& message, std::vector<std::string> partial)
      : Error(message), partial_(std::move(partial)) {}
  const std::vector<std::string>& partial() const { return partial_; }

 private:
  std::vector<std::string> partial_;
};

/// A polynomial that must factor into rational linear factors does not.
class NotABFunction : public Error {
 public:
  using Error::Error;
};

}  // namespace dmod

#pragma once

#include <stdexcept>
#include <string>

namespace fanmoduli {

// Base of every exception thrown by the library. `code()` is a stable
// snake_case identifier used by the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Shape mismatch between operands (non-square determinant, etc.).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message)
      : Error("dimension", message) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

// Operation is well-defined but not supported for this input class.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message)
      : Error("unsupported", message) {}
};

// Text could not be parsed as the requested value.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

}  // namespace fanmoduli

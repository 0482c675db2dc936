#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclestab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or certificate text. `line()` is 1-based; 0 when the
/// input has no line structure (graph6, JSON).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented input domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Family or generator parameters violate their invariants.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Exact search refused because the instance is larger than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclestab

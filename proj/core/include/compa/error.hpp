#pragma once

#include <stdexcept>
#include <string>

namespace compa {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (degree mismatch,
/// non-bijective images, intransitive input where transitivity is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation needed to enumerate more elements than the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed generator text. `line()` is 1-based, 0 when not line specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace compa

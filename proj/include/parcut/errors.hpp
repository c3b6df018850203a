#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Weight outside [0, 2^62] or an overflowing total.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Vertex id outside [0, n).
class IdError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A precondition of a query was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace parcut

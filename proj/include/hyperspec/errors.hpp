#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperspec {

// Out-of-range indices, malformed parameters, non-finite matrices.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input that the operation cannot handle (isolated vertices).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A hypergraph that violates the orientation invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperspec

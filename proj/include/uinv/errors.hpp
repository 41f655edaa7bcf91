#pragma once

#include <stdexcept>
#include <string>

namespace uinv {

// Malformed text, documents or command arguments.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside the field: division by zero, mixed-field operands.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace uinv

#pragma once

#include <stdexcept>
#include <string>

namespace dof {

// Precondition or parameter outside the supported domain (bad literal sets,
// alpha outside a proven validity range, malformed configs).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or enumeration ran past its caller-supplied budget. Never a
// wrong answer, always an explicit failure.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (DIMACS, JSON config).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dof

#pragma once

#include <stdexcept>
#include <string>

namespace ppn {

/// A documented precondition of an operation does not hold for its input
/// (out-of-range vertex, multiplicity above the cap, non-critical graph
/// handed to a theorem check, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search exceeded its configured node/assignment budget. The answer is
/// unknown; nothing partial is ever reported as complete.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph file or command-line input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppn

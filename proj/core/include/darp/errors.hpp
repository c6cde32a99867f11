#pragma once

#include <stdexcept>
#include <string>

namespace darp {

// Inputs that violate an operation's domain (empty group, overlapping
// clusters, anchor not in point set, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally broken instances or assignments (unknown location id,
// request served twice, infeasible walk where a feasible one is required).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact matchers need an even number of vertices; the grouping layer is
// responsible for carrying the odd cluster.
class OddCardinalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exact oracles refuse instances beyond their enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance/assignment files. line == 0 means "not line-specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace darp

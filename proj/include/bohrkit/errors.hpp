#pragma once

#include <stdexcept>
#include <string>

namespace bohrkit {

// Malformed input or violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured work limit (matrix cells, grid points, orbit steps) was hit.
// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The prime table cannot be extended far enough to index a prime factor.
class TableExtensionError : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bohrkit

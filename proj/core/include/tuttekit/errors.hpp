#pragma once

#include <stdexcept>
#include <string>

namespace tuttekit {

// A computation would exceed a configured size or time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An argument is outside the domain of an operation (bad vertex id,
// singular evaluation point, malformed input text, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tuttekit

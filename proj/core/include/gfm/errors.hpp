#pragma once

#include <stdexcept>
#include <string>

namespace gfm {

// Malformed input (wrong shapes, unparsable numbers) is reported with
// std::invalid_argument. The two types below cover the remaining failure
// classes so that callers (the CLI in particular) can tell them apart.

/// A mathematical precondition does not hold, e.g. hyperplanes that are not
/// in general position or a conic line that is not tangent.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required,
                 unsigned long long budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

}  // namespace gfm

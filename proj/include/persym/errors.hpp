#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace persym {

/// Shapes or lengths that do not line up (vstack of mismatched widths,
/// parameter segments of the wrong length, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed form was asked for arguments outside every case guard it states.
/// Callers fall back to a recurrence or to the census.
class NotCoveredError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Refusal to start an exhaustive sweep larger than the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double log2_work, int log2_budget)
      : std::runtime_error(what), log2_work_(log2_work), log2_budget_(log2_budget) {}

  double log2_work() const noexcept { return log2_work_; }
  int log2_budget() const noexcept { return log2_budget_; }

 private:
  double log2_work_;
  int log2_budget_;
};

/// Internal inconsistency, e.g. a moment integral that is not an integer.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace persym

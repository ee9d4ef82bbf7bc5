#pragma once

#include <string>
#include <vector>

#include "persym/census.hpp"

namespace persym::cli {

/// One identity instance with both sides written out.
struct Check {
  std::string identity;
  std::string instance;
  std::string lhs;
  std::string rhs;
  std::string lhs_path;
  std::string rhs_path;
  bool holds = false;
};

/// Size bounds for a suite; a negative value picks the suite's own default.
struct SuiteBounds {
  int max_s = -1;
  int max_k = -1;
  int max_m = -1;
  int max = -1;
  CensusOptions opts;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  /// Instances left out, with the reason (budget refusals mostly).
  std::vector<std::string> skipped;

  bool passed() const;
  std::size_t failures() const;
};

std::vector<std::string> suite_names();

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds);

}  // namespace persym::cli

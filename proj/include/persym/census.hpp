#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/families.hpp"

namespace persym {

struct CensusOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int threads = 0;
  /// Refuse sweeps of more than 2^log2_budget rank computations.
  int log2_budget = 34;
};

/// counts[i] = number of family members of rank i, for i = 0..max_rank.
struct RankDistribution {
  FamilyShape shape;
  std::vector<BigInt> counts;

  /// counts[i], or 0 outside the stored range.
  BigInt at(int i) const;
  BigInt total() const;
};

/// Counts of rank tuples over a chain of nested sub-shapes.
struct JointRankTable {
  FamilyShape shape;
  std::vector<FamilyShape> chain;
  std::map<std::vector<int>, BigInt> counts;

  BigInt at(const std::vector<int>& tuple) const;
  BigInt total() const;
  /// Count of the all-equal tuple (i, ..., i).
  BigInt diagonal(int i) const;
  /// Sum over all coordinates but the last.
  RankDistribution last_marginal() const;
};

/// Throws BudgetError when 2^log2_work exceeds the budget.
void check_budget(const char* what, double log2_work, int log2_budget);

RankDistribution rank_census(const FamilyShape& shape, const CensusOptions& opts = {});

/// Joint ranks over nested_chain(shape).
JointRankTable joint_rank_census(const FamilyShape& shape, const CensusOptions& opts = {});
/// Joint ranks over an explicit chain; every entry must be nested in `shape`.
JointRankTable joint_rank_census(const FamilyShape& shape, const std::vector<FamilyShape>& chain,
                                 const CensusOptions& opts = {});

/// Number of members whose chain ranks all equal i.
BigInt diagonal_sigma(const FamilyShape& shape, int i, const CensusOptions& opts = {});

/// counts[k] / 2^param_bits for a shape with total rows == k.
Rational invertible_fraction(const FamilyShape& shape, const CensusOptions& opts = {});
Rational invertible_fraction(const RankDistribution& dist);

/// Memoizing front end shared by the recurrences and verification suites.
/// Safe to use from several threads.
class CensusCache {
 public:
  explicit CensusCache(CensusOptions opts = {}) : opts_(opts) {}

  const RankDistribution& distribution(const FamilyShape& shape);
  const JointRankTable& joint(const FamilyShape& shape);
  const CensusOptions& options() const { return opts_; }

 private:
  CensusOptions opts_;
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<RankDistribution>> dist_;
  std::map<std::string, std::unique_ptr<JointRankTable>> joint_;
};

}  // namespace persym

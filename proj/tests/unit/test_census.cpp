#include <gtest/gtest.h>

#include "oracle.hpp"
#include "persym/census.hpp"
#include "persym/errors.hpp"

using namespace persym;

namespace {

void expect_matches_oracle(const RankDistribution& d, const std::map<int, std::uint64_t>& hist) {
  for (int i = 0; i <= d.shape.max_rank() + 1; ++i) {
    const auto it = hist.find(i);
    EXPECT_EQ(d.at(i), it == hist.end() ? 0 : it->second) << to_string(d.shape) << " i=" << i;
  }
}

}  // namespace

TEST(Census, SingleBlocksMatchNaiveEnumeration) {
  for (int s = 0; s <= 4; ++s)
    for (int k = 0; k <= 5; ++k) expect_matches_oracle(rank_census(single_shape(s, k)), oracle::stacked_census({s}, k));
}

TEST(Census, BlockOverFreeRowsMatchesNaiveEnumeration) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 1; k <= 3; ++k)
        expect_matches_oracle(rank_census(rows_shape(n, m, k)), oracle::stacked_census({1 + m}, k, n));
}

TEST(Census, DoubleAndTripleMatchNaiveEnumeration) {
  for (int s = 1; s <= 2; ++s)
    for (int m = 0; m <= 2; ++m)
      for (int k = 1; k <= 4; ++k)
        expect_matches_oracle(rank_census(double_shape(s, m, k)), oracle::stacked_census({s, s + m}, k));
  for (int m = 0; m <= 1; ++m)
    for (int l = 0; l <= 1; ++l)
      for (int k = 1; k <= 3; ++k)
        expect_matches_oracle(rank_census(triple_shape(1, m, l, k)), oracle::stacked_census({1, 1 + m, 1 + m + l}, k));
}

TEST(Census, SmallExamples) {
  EXPECT_EQ(rank_census(single_shape(2, 2)).counts, (std::vector<BigInt>{1, 3, 4}));
  EXPECT_EQ(rank_census(single_shape(0, 1)).counts, (std::vector<BigInt>{1}));
  EXPECT_EQ(rank_census(rows_shape(1, 2, 3)).counts, (std::vector<BigInt>{1, 13, 66, 176}));
}

TEST(Census, TotalsArePowersOfTwo) {
  for (const auto& sh : {single_shape(4, 6), rows_shape(2, 1, 4), double_shape(2, 2, 5), triple_shape(2, 0, 1, 3)}) {
    EXPECT_EQ(rank_census(sh).total(), pow2(sh.param_bits())) << to_string(sh);
  }
}

TEST(Census, ResultDoesNotDependOnThreadCount) {
  const auto sh = double_shape(3, 1, 5);
  const auto one = rank_census(sh, {1, 34});
  const auto three = rank_census(sh, {3, 34});
  EXPECT_EQ(one.counts, three.counts);
  const auto j1 = joint_rank_census(sh, CensusOptions{1, 34});
  const auto j3 = joint_rank_census(sh, CensusOptions{3, 34});
  EXPECT_EQ(j1.counts, j3.counts);
}

TEST(Census, BudgetRefusalCarriesTheEstimate) {
  try {
    rank_census(double_shape(6, 6, 20), {1, 20});
    FAIL() << "expected a budget refusal";
  } catch (const BudgetError& e) {
    EXPECT_GT(e.log2_work(), 20.0);
    EXPECT_EQ(e.log2_budget(), 20);
  }
}

TEST(Census, JointTableMarginalsMatchPlainCensus) {
  for (const auto& sh : {single_shape(3, 4), double_shape(2, 1, 4), triple_shape(2, 1, 1, 3), rows_shape(2, 1, 3)}) {
    const auto t = joint_rank_census(sh);
    EXPECT_EQ(t.total(), pow2(sh.param_bits()));
    EXPECT_EQ(t.last_marginal().counts, rank_census(sh).counts) << to_string(sh);
    // every coordinate's marginal is the sub-shape census, scaled by the unused bits
    for (std::size_t c = 0; c < t.chain.size(); ++c) {
      const auto sub = rank_census(t.chain[c]);
      std::map<int, BigInt> marg;
      for (const auto& [tup, n] : t.counts) marg[tup[c]] += n;
      const BigInt scale = pow2(sh.param_bits() - t.chain[c].param_bits());
      for (int i = 0; i <= t.chain[c].max_rank(); ++i) EXPECT_EQ(marg[i], sub.at(i) * scale) << to_string(t.chain[c]);
    }
  }
}

TEST(Census, JointTableChainRanksAreMonotone) {
  // each sub-shape is a submatrix of the last, so its rank cannot exceed it
  const auto t = joint_rank_census(triple_shape(2, 1, 0, 4));
  for (const auto& [tup, n] : t.counts) {
    for (std::size_t c = 0; c + 1 < tup.size(); ++c) EXPECT_LE(tup[c], tup.back());
  }
}

TEST(Census, DiagonalSigmaIsTheAllEqualTupleCount) {
  const auto sh = double_shape(2, 1, 4);
  const auto t = joint_rank_census(sh);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(diagonal_sigma(sh, i), t.at({i, i, i}));
}

TEST(Census, InvertibleFractionOfSquareDoubleIsThreeEighths) {
  EXPECT_EQ(invertible_fraction(double_shape(1, 0, 2)), Rational(3, 8));
  EXPECT_EQ(invertible_fraction(double_shape(2, 0, 4)), Rational(3, 8));
  EXPECT_EQ(invertible_fraction(triple_shape(1, 0, 0, 3)), Rational(21, 64));
  EXPECT_THROW(invertible_fraction(double_shape(1, 0, 3)), DimensionError);
}

TEST(Census, CacheReturnsTheSameTable) {
  CensusCache cache;
  const auto& a = cache.distribution(single_shape(3, 3));
  const auto& b = cache.distribution(single_shape(3, 3));
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(&cache.joint(single_shape(3, 3)), &cache.joint(single_shape(3, 3)));
}

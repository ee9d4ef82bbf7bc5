#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/bitmatrix.hpp"
#include "persym/census.hpp"

namespace persym {

/// Truncation sum_{i=1..d} alpha_i T^-i of a point of the unit interval.
/// coeffs[0] is alpha_1.
struct LaurentPoint {
  Bits coeffs;

  int depth() const { return static_cast<int>(coeffs.size()); }
  static LaurentPoint from_string(std::string_view bits) { return {bits_from_string(bits)}; }
  static LaurentPoint from_word(Word w, int depth) { return {bits_from_word(w, static_cast<std::size_t>(depth))}; }
};

/// E on the residue bit: 0 -> +1, 1 -> -1.
inline int character(bool residue_bit) { return residue_bit ? -1 : 1; }

/// Coefficient of T^-1 in t*Y*Z, with Y and Z given by their coefficient
/// vectors (index j = coefficient of T^j). Equals z^T D_{|Z| x |Y|}(t) y.
/// Throws DimensionError if depth < |Y| + |Z| - 1.
bool residue_bilinear(const LaurentPoint& t, const Bits& y, const Bits& z);

enum class DegreeMode { AtMost, Exactly };

/// deg <= degree or deg == degree; the zero polynomial only counts for AtMost.
struct DegreeCondition {
  int degree = 0;
  DegreeMode mode = DegreeMode::AtMost;
};

/// sum over Y (deg Y <= k-1, or = k-1) of prod_j sum_{U_j} E(p_j Y U_j),
/// one point p_j per companion condition.
struct SumShape {
  int k = 1;
  DegreeMode y_mode = DegreeMode::AtMost;
  std::vector<DegreeCondition> companions;

  /// h: deg Y <= k-1, deg Z <= s-1.
  static SumShape single(int s, int k);
  /// Signed sum: deg Y = k-1, deg Z = s-1.
  static SumShape exact_single(int s, int k);
  /// deg Z <= m and one companion with deg U = 0.
  static SumShape one_row_exact(int m, int k);
  /// deg Z <= m and n companions with deg U <= 0.
  static SumShape rows(int n, int m, int k);
  /// deg Z <= s-1, deg U <= s+m-1.
  static SumShape double_block(int k, int s, int m);
  /// deg Z <= s-1, deg U <= s+m-1, deg V <= s+m+l-1.
  static SumShape triple_block(int k, int s, int m, int l = 0);

  /// Coefficients of each point the sum depends on: k + degree.
  std::vector<int> depths() const;
  int coset_bits() const;
  /// True when every condition is AtMost.
  bool all_bounded() const;
};

std::string to_string(const SumShape& shape);

/// The literal nested sum over all polynomials meeting the degree conditions.
/// Points may be deeper than needed. Throws BudgetError if the number of
/// terms exceeds 2^log2_budget.
BigInt exp_sum_direct(const SumShape& shape, const std::vector<LaurentPoint>& points, int log2_budget = 34);

/// The same value from ranks of the associated stacked persymmetric matrix:
///   all bounded:          2^(k + sum(deg_j + 1) - rank)
///   exact single block:   +-2^(s+k-j-2) or 0 from the four corner ranks
///   exact one-row:        2^(k+m+1-r) if the extra row keeps the rank, else 0
/// Throws DomainError for other mixes of exact conditions.
BigInt exp_sum_rank(const SumShape& shape, const std::vector<LaurentPoint>& points);

/// integral of value^q over the unit interval(s): average of exp_sum_rank^q
/// over all coset representatives (every point truncated to its depth).
/// Throws BudgetError over budget, ConsistencyError if the average is not an
/// integer.
BigInt integral_moment(const SumShape& shape, int q, const CensusOptions& opts = {});

}  // namespace persym

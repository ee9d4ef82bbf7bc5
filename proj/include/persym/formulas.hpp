#pragma once

#include <array>
#include <string>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/census.hpp"

namespace persym {

/// A formula value together with the case that produced it.
struct FormulaResult {
  BigInt value;
  std::string provenance;
};

// ---- single persymmetric blocks ------------------------------------------

/// Number of s x k persymmetric matrices of rank i. Returns 0 for
/// i > min(s,k); s > k is answered through the transpose.
FormulaResult gamma_persym(int s, int k, int i);

/// Joint-rank count over the four corner truncations of an s x k block,
/// tuple in grid order:
///   j1 = rank of (s-1)x(k-1), j2 = rank of (s-1)x k,
///   j3 = rank of s x(k-1),    j4 = rank of s x k.
/// Five printed cases, 0 otherwise. Requires 1 <= s <= k.
FormulaResult joint_persym_formula(int s, int k, const std::array<int, 4>& grid);

/// Reorders a tuple from nested_chain(Single) order ((s-1)x(k-1), s x(k-1),
/// (s-1)x k, s x k) into the grid order used by joint_persym_formula.
std::array<int, 4> grid_from_chain(const std::vector<int>& chain_tuple);

// ---- persymmetric block plus free rows -----------------------------------

/// Coefficient a_j^(n) of the free-row expansion, 0 <= j <= n.
FormulaResult a_coeff(int n, int j);

/// Rank-i count of a (1+m) x k persymmetric block stacked over n free rows,
/// as a combination of single-block counts. Domain 0 <= i <= min(k, n+m+1).
FormulaResult gamma_persym_rows(int n, int m, int k, int i);

/// Case tables for a single free row (n = 1): k = 2; m = 0; m = 1;
/// 3 <= k <= 1+m; 2 <= m <= k-2. Throws NotCoveredError elsewhere.
FormulaResult gamma_one_row_table(int m, int k, int i);

// ---- double persymmetric [s over s+m] x k --------------------------------

/// Closed forms for k > i and k = i, dispatched on m = 0, 1, >= 2.
/// Returns 0 for i > min(2s+m, k). Throws NotCoveredError for s < 1, m < 0.
FormulaResult gamma_double(int s, int m, int k, int i);

/// Remainder term of the double recurrence from its closed case list.
/// Every matching case when guards overlap.
std::vector<FormulaResult> delta_double_candidates(int s, int m, int k, int i);
/// The first matching case. Throws NotCoveredError if none applies.
FormulaResult delta_double(int s, int m, int k, int i);

/// Remainder from joint-rank counts: sigma_i - 3 sigma_{i-1} + 2 sigma_{i-2},
/// sigma taken over the chain of Double(s,m,k).
BigInt delta_double_from_sigma(const JointRankTable& chain_table, int i);

/// Diagonal joint-rank count over the chain of Double(s,m,k) from closed
/// forms at the smaller square shapes. Requires s >= 2, m >= 0, k >= 1.
FormulaResult sigma_formula(int s, int m, int k, int i);

/// Recurrence in s with the closed remainder; terms with s >= 2 recurse,
/// terms with s = 1 come from gamma_double.
FormulaResult gamma_double_recur(int s, int m, int k, int i);

/// The same recurrence with every term taken from the census: Gamma terms
/// from rank censuses, the remainder from joint-rank diagonals.
FormulaResult gamma_double_recur_census(int s, int m, int k, int i, CensusCache& cache);

// ---- triple persymmetric [s over s+m over s+m] x k -----------------------

struct TripleCandidate {
  FormulaResult result;
  /// False for the i = s+2, s+3, s+4 special cases of the m = 1 table once
  /// i - s > s; there they contradict the i >= 2s+1 cases.
  bool preferred = true;
};

/// Every printed case whose guard matches (l = 0).
std::vector<TripleCandidate> gamma_triple_candidates(int s, int m, int k, int i);
/// First preferred case. Returns 0 for i > min(3s+2m, k); throws
/// NotCoveredError when no case applies.
FormulaResult gamma_triple(int s, int m, int k, int i);

/// Remainder of the triple recurrence:
/// sigma_i - 7 sigma_{i-1} + 14 sigma_{i-2} - 8 sigma_{i-3}.
BigInt delta_triple_from_sigma(const JointRankTable& chain_table, int i);

/// Right-hand side of the triple recurrence in s for Triple(s,m,l,k) with all
/// Gamma and sigma terms from the census. Requires s >= 2.
FormulaResult gamma_triple_recur(int s, int m, int l, int k, int i, CensusCache& cache);

// ---- moments --------------------------------------------------------------

/// 2^-measure_bits * sum_i counts[i] * 2^(q (row_dim_exp - i)), exact.
/// Throws ConsistencyError if the result is not an integer.
FormulaResult moment(const std::vector<BigInt>& counts, int q, int row_dim_exp, int measure_bits);
FormulaResult moment(const RankDistribution& dist, int q, int row_dim_exp, int measure_bits);
/// Moment with the family's natural exponents: row_dim_exp = k + total rows,
/// measure_bits = param_bits. This is the solution count of the associated
/// bilinear system.
FormulaResult moment(const RankDistribution& dist, int q);

/// Three-branch closed form for the q-th moment of the single-block sum with
/// deg Y <= k-1, deg Z <= m. Requires q >= 1, 0 <= m <= k-1.
FormulaResult r_q_single_closed(int q, int k, int m);

// ---- reduction identities -------------------------------------------------

enum class Reduction {
  DeltaStability,     // remainder independent of k past the rank index
  ColumnGrowth,       // Gamma(k+1) - Gamma(k) for the double family
  DoubleMiddleRanks,  // Gamma_{s+j} from Gamma_{s+1} of a shorter stack
  DoubleTopRanks,     // Gamma_{s+m+1+j} from the equal-block double family
  TripleEqualBlocks,  // high ranks of [s,s,s] from [s-j,s-j,s-j]
  TripleOneExtra,     // high ranks of [s,s+1,s+1]
  TripleManyExtra,    // high ranks of [s,s+m,s+m], m >= 2
};

const char* reduction_name(Reduction r);
/// Parses the names returned by reduction_name. Throws DomainError.
Reduction parse_reduction(const std::string& name);
std::vector<Reduction> all_reductions();

struct IdentityCheck {
  std::string identity;
  std::string instance;
  BigInt lhs;
  BigInt rhs;
  std::string lhs_path;
  std::string rhs_path;
  bool holds() const { return lhs == rhs; }
};

struct ReductionBounds {
  int max_s = 3;
  int max_m = 3;
  int max_k = 8;
  /// Shapes with at most this many parameter bits are evaluated by census,
  /// larger ones by closed forms.
  int census_bits = 22;
};

/// Gamma values for double and triple shapes: census when the shape is small
/// enough, closed forms otherwise. Reports which path was used.
class GammaOracle {
 public:
  GammaOracle(CensusCache& cache, int census_bits) : cache_(cache), census_bits_(census_bits) {}

  FormulaResult gamma(const FamilyShape& shape, int i);
  FormulaResult delta_double(int s, int m, int k, int i);

 private:
  CensusCache& cache_;
  int census_bits_;
};

/// All in-guard instances of one identity family within the bounds.
std::vector<IdentityCheck> reduction_identities(Reduction kind, const ReductionBounds& bounds, GammaOracle& oracle);

}  // namespace persym

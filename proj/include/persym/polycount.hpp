#pragma once

#include <vector>

#include "persym/bigint.hpp"
#include "persym/census.hpp"

namespace persym {

/// Number of tuples (Y_i, U_i^(1), ..., U_i^(c))_{i=1..q} over F2[T] with
/// deg Y_i <= k-1, deg U_i^(j) <= bounds[j], and
///   Y_1 U_1^(j) + ... + Y_q U_q^(j) = 0   for every j.
///
/// For fixed Y the equations are linear in the companions, so companion j
/// contributes 2^(q (bounds[j]+1) - rank{ T^e Y_i : e <= bounds[j] }); only the
/// 2^(qk) Y-tuples are enumerated. Throws BudgetError when q*k exceeds the
/// budget, DomainError on negative bounds or q < 1.
BigInt count_solutions(int k, const std::vector<int>& bounds, int q, const CensusOptions& opts = {});

/// Reference enumeration of every tuple, companions included. Only for tiny
/// instances; the budget applies to the full tuple space.
BigInt count_solutions_naive(int k, const std::vector<int>& bounds, int q, const CensusOptions& opts = {});

}  // namespace persym

#include "persym/polycount.hpp"

#include "persym/errors.hpp"
#include "sharding.hpp"

namespace persym {

namespace {

void validate(int k, const std::vector<int>& bounds, int q) {
  if (k < 1) throw DomainError("count_solutions needs k >= 1");
  if (q < 1) throw DomainError("count_solutions needs q >= 1");
  for (int b : bounds) {
    if (b < 0) throw DomainError("companion degree bounds must be >= 0");
    if (k + b > 64) throw DimensionError("products Y*U must fit in 64 coefficients");
  }
}

struct Search {
  int k;
  int q;
  const std::vector<int>& bounds;
  std::vector<XorBasis> basis;
  std::vector<int> undo;  // slots, in insertion order
  int rank_sum = 0;

  // Pushes T^e Y into each companion's basis; returns the number of slots pushed.
  std::size_t push(Word y) {
    std::size_t pushed = 0;
    for (std::size_t j = 0; j < bounds.size(); ++j) {
      for (int e = 0; e <= bounds[j]; ++e) {
        const int slot = basis[j].insert(y << e);
        if (slot != XorBasis::kNone) ++rank_sum;
        undo.push_back(slot);
        ++pushed;
      }
    }
    return pushed;
  }

  void pop() {
    for (std::size_t j = bounds.size(); j-- > 0;) {
      for (int e = bounds[j]; e >= 0; --e) {
        const int slot = undo.back();
        undo.pop_back();
        if (slot != XorBasis::kNone) --rank_sum;
        basis[j].undo(slot);
      }
    }
  }

  // Tally by total rank: the count for a Y-tuple is 2^(unknowns - rank_sum).
  void run(int depth, std::vector<std::uint64_t>& tally) {
    if (depth == q) {
      ++tally[static_cast<std::size_t>(rank_sum)];
      return;
    }
    const Word end = Word{1} << k;
    for (Word y = 0; y < end; ++y) {
      push(y);
      run(depth + 1, tally);
      pop();
    }
  }
};

}  // namespace

BigInt count_solutions(int k, const std::vector<int>& bounds, int q, const CensusOptions& opts) {
  validate(k, bounds, q);
  check_budget("polynomial solution count", static_cast<double>(q) * k, opts.log2_budget);
  int unknowns = 0;
  int max_rank = 0;
  for (int b : bounds) {
    unknowns += q * (b + 1);
    max_rank += q * (b + 1);
  }
  const auto tally = detail::run_sharded(
      Word{1} << k, static_cast<std::size_t>(max_rank) + 1, opts,
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& t) {
        Search s{k, q, bounds, std::vector<XorBasis>(bounds.size()), {}, 0};
        for (Word y = lo; y < hi; ++y) {
          s.push(y);
          s.run(1, t);
          s.pop();
        }
      });
  BigInt total = 0;
  for (std::size_t r = 0; r < tally.size(); ++r) {
    if (tally[r] != 0) total += BigInt(tally[r]) * pow2(unknowns - static_cast<int>(r));
  }
  return total;
}

BigInt count_solutions_naive(int k, const std::vector<int>& bounds, int q, const CensusOptions& opts) {
  validate(k, bounds, q);
  int width = k;
  for (int b : bounds) width += b + 1;
  check_budget("naive polynomial solution count", static_cast<double>(q) * width, opts.log2_budget);
  if (q * width > 62) throw BudgetError("naive count needs more than 62 bits", q * width, 62);

  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << (q * width);
  std::vector<Word> sums(bounds.size());
  for (std::uint64_t p = 0; p < end; ++p) {
    std::fill(sums.begin(), sums.end(), 0);
    std::uint64_t rest = p;
    for (int i = 0; i < q; ++i) {
      const Word y = rest & low_mask(static_cast<std::size_t>(k));
      rest >>= k;
      for (std::size_t j = 0; j < bounds.size(); ++j) {
        const Word u = rest & low_mask(static_cast<std::size_t>(bounds[j] + 1));
        rest >>= bounds[j] + 1;
        for (Word v = u; v != 0; v &= v - 1) sums[j] ^= y << std::countr_zero(v);
      }
    }
    bool ok = true;
    for (Word s : sums) ok = ok && s == 0;
    if (ok) ++count;
  }
  return count;
}

}  // namespace persym

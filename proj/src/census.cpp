#include "persym/census.hpp"

#include <algorithm>
#include <cmath>

#include "persym/errors.hpp"
#include "sharding.hpp"

namespace persym {

BigInt RankDistribution::at(int i) const {
  if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i)];
}

BigInt RankDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

BigInt JointRankTable::at(const std::vector<int>& tuple) const {
  auto it = counts.find(tuple);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt JointRankTable::total() const {
  BigInt t = 0;
  for (const auto& [tuple, c] : counts) t += c;
  return t;
}

BigInt JointRankTable::diagonal(int i) const { return at(std::vector<int>(chain.size(), i)); }

RankDistribution JointRankTable::last_marginal() const {
  RankDistribution d{shape, std::vector<BigInt>(static_cast<std::size_t>(shape.max_rank()) + 1, 0)};
  for (const auto& [tuple, c] : counts) d.counts[static_cast<std::size_t>(tuple.back())] += c;
  return d;
}

void check_budget(const char* what, double log2_work, int log2_budget) {
  if (log2_work > log2_budget) {
    throw BudgetError(std::string(what) + " needs about 2^" + std::to_string(static_cast<int>(std::ceil(log2_work))) +
                          " rank computations, over the budget of 2^" + std::to_string(log2_budget),
                      log2_work, log2_budget);
  }
}

namespace {

using detail::run_sharded;

void require_word_segments(const FamilyShape& shape) {
  for (int b : shape.segment_bits()) {
    if (b >= 63) throw BudgetError(to_string(shape) + " has a parameter segment of " + std::to_string(b) + " bits",
                                   static_cast<double>(b), 62);
  }
}

struct Sweep {
  std::vector<std::vector<RowSpec>> rows;  // per segment
  std::vector<std::uint64_t> range;        // 2^bits per segment
};

// Enumerates segments seg, seg-1, ..., 0 below a fixed prefix held in `basis`.
void sweep(const Sweep& sw, int seg, std::uint64_t lo, std::uint64_t hi, XorBasis& basis,
           std::vector<std::uint64_t>& tally) {
  const auto& rows = sw.rows[static_cast<std::size_t>(seg)];
  int slots[kWordBits];
  for (std::uint64_t v = lo; v < hi; ++v) {
    std::size_t used = 0;
    for (const auto& r : rows) slots[used++] = basis.insert((v >> r.shift) & r.mask);
    if (seg == 0) {
      ++tally[static_cast<std::size_t>(basis.rank())];
    } else {
      sweep(sw, seg - 1, 0, sw.range[static_cast<std::size_t>(seg - 1)], basis, tally);
    }
    while (used > 0) basis.undo(slots[--used]);
  }
}

}  // namespace

RankDistribution rank_census(const FamilyShape& shape, const CensusOptions& opts) {
  validate(shape);
  check_budget(("census of " + to_string(shape)).c_str(), shape.param_bits(), opts.log2_budget);
  require_word_segments(shape);

  const auto bits = shape.segment_bits();
  const auto specs = row_specs(shape, shape);
  Sweep sw;
  sw.rows.resize(bits.size());
  for (const auto& r : specs) sw.rows[static_cast<std::size_t>(r.segment)].push_back(r);
  for (int b : bits) sw.range.push_back(std::uint64_t{1} << b);

  const std::size_t size = static_cast<std::size_t>(shape.max_rank()) + 1;
  const int top = static_cast<int>(bits.size()) - 1;
  const auto sum = run_sharded(sw.range.back(), size, opts,
                               [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& tally) {
                                 XorBasis basis;
                                 sweep(sw, top, lo, hi, basis, tally);
                               });
  RankDistribution d{shape, {}};
  for (auto c : sum) d.counts.emplace_back(c);
  return d;
}

JointRankTable joint_rank_census(const FamilyShape& shape, const CensusOptions& opts) {
  return joint_rank_census(shape, nested_chain(shape), opts);
}

JointRankTable joint_rank_census(const FamilyShape& shape, const std::vector<FamilyShape>& chain,
                                 const CensusOptions& opts) {
  validate(shape);
  if (chain.empty()) throw DomainError("joint census needs a nonempty chain");
  check_budget(("joint census of " + to_string(shape)).c_str(),
               shape.param_bits() + std::log2(static_cast<double>(chain.size())), opts.log2_budget);
  require_word_segments(shape);

  std::vector<std::vector<RowSpec>> specs;
  for (const auto& sub : chain) specs.push_back(row_specs(sub, shape));
  const auto bits = shape.segment_bits();
  std::vector<int> offset;
  int acc = 0;
  for (int b : bits) {
    offset.push_back(acc);
    acc += b;
  }

  const std::size_t radix = static_cast<std::size_t>(shape.max_rank()) + 1;
  std::size_t size = 1;
  for (std::size_t e = 0; e < chain.size(); ++e) size *= radix;

  const std::uint64_t range = std::uint64_t{1} << shape.param_bits();
  const auto sum = run_sharded(range, size, opts, [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& tally) {
    std::vector<Word> words(bits.size());
    for (std::uint64_t p = lo; p < hi; ++p) {
      for (std::size_t j = 0; j < bits.size(); ++j) words[j] = (p >> offset[j]) & low_mask(static_cast<std::size_t>(bits[j]));
      std::size_t index = 0;
      for (std::size_t e = chain.size(); e-- > 0;) {
        XorBasis basis;
        for (const auto& r : specs[e]) basis.insert((words[static_cast<std::size_t>(r.segment)] >> r.shift) & r.mask);
        index = index * radix + static_cast<std::size_t>(basis.rank());
      }
      ++tally[index];
    }
  });

  JointRankTable t{shape, chain, {}};
  for (std::size_t index = 0; index < size; ++index) {
    if (sum[index] == 0) continue;
    std::vector<int> tuple(chain.size());
    std::size_t rest = index;
    for (std::size_t e = 0; e < chain.size(); ++e) {
      tuple[e] = static_cast<int>(rest % radix);
      rest /= radix;
    }
    t.counts.emplace(std::move(tuple), BigInt(sum[index]));
  }
  return t;
}

BigInt diagonal_sigma(const FamilyShape& shape, int i, const CensusOptions& opts) {
  if (i < 0) return 0;
  return joint_rank_census(shape, opts).diagonal(i);
}

Rational invertible_fraction(const RankDistribution& dist) {
  const auto& f = dist.shape;
  if (f.total_rows() != f.k) {
    throw DimensionError(to_string(f) + " is not square: " + std::to_string(f.total_rows()) + " rows, " +
                         std::to_string(f.k) + " columns");
  }
  return Rational(dist.at(f.k), pow2(f.param_bits()));
}

Rational invertible_fraction(const FamilyShape& shape, const CensusOptions& opts) {
  if (shape.total_rows() != shape.k) return invertible_fraction(RankDistribution{shape, {}});
  return invertible_fraction(rank_census(shape, opts));
}

const RankDistribution& CensusCache::distribution(const FamilyShape& shape) {
  std::lock_guard lock(mu_);
  auto& slot = dist_[to_string(shape)];
  if (!slot) slot = std::make_unique<RankDistribution>(rank_census(shape, opts_));
  return *slot;
}

const JointRankTable& CensusCache::joint(const FamilyShape& shape) {
  std::lock_guard lock(mu_);
  auto& slot = joint_[to_string(shape)];
  if (!slot) slot = std::make_unique<JointRankTable>(joint_rank_census(shape, opts_));
  return *slot;
}

}  // namespace persym

#include "persym/laurent.hpp"

#include <bit>
#include <cmath>

#include "persym/errors.hpp"
#include "sharding.hpp"

namespace persym {

namespace {

// Carry-less product of two polynomials over F2 (bit j = coefficient of T^j).
Word clmul(Word a, Word b) {
  Word out = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    out ^= a << j;
    b &= b - 1;
  }
  return out;
}

// Residue of t*Y*U: alpha_{j+1} pairs with the T^j coefficient of Y*U.
bool residue_word(Word alpha, Word y, Word u) { return (std::popcount(clmul(y, u) & alpha) & 1) != 0; }

std::string mode_text(DegreeMode m) { return m == DegreeMode::AtMost ? "<=" : "="; }

void check_points(const SumShape& shape, const std::vector<LaurentPoint>& points) {
  if (points.size() != shape.companions.size()) {
    throw DimensionError(to_string(shape) + " takes " + std::to_string(shape.companions.size()) + " points, got " +
                         std::to_string(points.size()));
  }
  const auto need = shape.depths();
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].depth() < need[j]) {
      throw DimensionError("point " + std::to_string(j + 1) + " has depth " + std::to_string(points[j].depth()) +
                           ", the sum reads " + std::to_string(need[j]) + " coefficients");
    }
  }
  if (shape.k > 63) throw DimensionError("exponential sums support k <= 63");
  for (int d : need)
    if (d > 63) throw DimensionError("exponential sums support point depths <= 63");
}

void validate_shape(const SumShape& shape) {
  if (shape.k < 1) throw DomainError("exponential sum needs k >= 1");
  for (const auto& c : shape.companions)
    if (c.degree < 0) throw DomainError("companion degree must be >= 0");
}

Word prefix_word(const LaurentPoint& p, int depth) {
  Word w = 0;
  for (int i = 0; i < depth; ++i)
    if (p.coeffs[static_cast<std::size_t>(i)]) w |= Word{1} << i;
  return w;
}

// exp_sum_rank on word images of the points: 0 means value 0, otherwise
// value = sign * 2^exp.
struct Value {
  int sign = 0;
  int exp = 0;
};

enum class RankRule { Bounded, ExactSingle, ExactOneRow };

RankRule rule_of(const SumShape& shape) {
  if (shape.all_bounded()) return RankRule::Bounded;
  const auto& c = shape.companions;
  if (shape.y_mode == DegreeMode::Exactly && c.size() == 1 && c[0].mode == DegreeMode::Exactly) {
    return RankRule::ExactSingle;
  }
  if (shape.y_mode == DegreeMode::AtMost && c.size() == 2 && c[0].mode == DegreeMode::AtMost &&
      c[1].mode == DegreeMode::Exactly && c[1].degree == 0) {
    return RankRule::ExactOneRow;
  }
  throw DomainError("no rank formula for " + to_string(shape));
}

int persym_rank(Word alpha, int rows, int cols) {
  XorBasis b;
  const Word mask = low_mask(static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i) b.insert((alpha >> i) & mask);
  return b.rank();
}

Value evaluate(const SumShape& shape, RankRule rule, const Word* w) {
  const int k = shape.k;
  const Word mask = low_mask(static_cast<std::size_t>(k));
  switch (rule) {
    case RankRule::Bounded: {
      XorBasis b;
      int e = k;
      for (std::size_t j = 0; j < shape.companions.size(); ++j) {
        const int rows = shape.companions[j].degree + 1;
        e += rows;
        for (int i = 0; i < rows; ++i) b.insert((w[j] >> i) & mask);
      }
      return {1, e - b.rank()};
    }
    case RankRule::ExactSingle: {
      const int s = shape.companions[0].degree + 1;
      const int r11 = persym_rank(w[0], s - 1, k - 1);
      const int r21 = persym_rank(w[0], s, k - 1);
      const int r12 = persym_rank(w[0], s - 1, k);
      const int r22 = persym_rank(w[0], s, k);
      if (r11 != r21 || r11 != r12) return {};
      const int j = r11;
      if (r22 == j) return {1, s + k - j - 2};
      if (r22 == j + 1) return {-1, s + k - j - 2};
      return {};
    }
    case RankRule::ExactOneRow: {
      const int m = shape.companions[0].degree;
      XorBasis b;
      for (int i = 0; i <= m; ++i) b.insert((w[0] >> i) & mask);
      const int r = b.rank();
      if (b.contains(w[1] & mask)) return {1, k + m + 1 - r};
      return {};
    }
  }
  return {};
}

BigInt to_big(const Value& v) {
  if (v.sign == 0) return 0;
  BigInt x = pow2(v.exp);
  return v.sign < 0 ? BigInt(-x) : x;
}

}  // namespace

bool residue_bilinear(const LaurentPoint& t, const Bits& y, const Bits& z) {
  if (y.empty() || z.empty()) return false;
  const std::size_t need = y.size() + z.size() - 1;
  if (static_cast<std::size_t>(t.depth()) < need) {
    throw DimensionError("residue needs depth " + std::to_string(need) + ", point has " + std::to_string(t.depth()));
  }
  if (need > 64) throw DimensionError("residue_bilinear supports |Y| + |Z| - 1 <= 64");
  return residue_word(prefix_word(t, static_cast<int>(need)), bits_to_word(y), bits_to_word(z));
}

SumShape SumShape::single(int s, int k) { return {k, DegreeMode::AtMost, {{s - 1, DegreeMode::AtMost}}}; }

SumShape SumShape::exact_single(int s, int k) { return {k, DegreeMode::Exactly, {{s - 1, DegreeMode::Exactly}}}; }

SumShape SumShape::one_row_exact(int m, int k) {
  return {k, DegreeMode::AtMost, {{m, DegreeMode::AtMost}, {0, DegreeMode::Exactly}}};
}

SumShape SumShape::rows(int n, int m, int k) {
  SumShape sh{k, DegreeMode::AtMost, {{m, DegreeMode::AtMost}}};
  for (int j = 0; j < n; ++j) sh.companions.push_back({0, DegreeMode::AtMost});
  return sh;
}

SumShape SumShape::double_block(int k, int s, int m) {
  return {k, DegreeMode::AtMost, {{s - 1, DegreeMode::AtMost}, {s + m - 1, DegreeMode::AtMost}}};
}

SumShape SumShape::triple_block(int k, int s, int m, int l) {
  return {k,
          DegreeMode::AtMost,
          {{s - 1, DegreeMode::AtMost}, {s + m - 1, DegreeMode::AtMost}, {s + m + l - 1, DegreeMode::AtMost}}};
}

std::vector<int> SumShape::depths() const {
  std::vector<int> d;
  for (const auto& c : companions) d.push_back(k + c.degree);
  return d;
}

int SumShape::coset_bits() const {
  int total = 0;
  for (int d : depths()) total += d;
  return total;
}

bool SumShape::all_bounded() const {
  if (y_mode != DegreeMode::AtMost) return false;
  for (const auto& c : companions)
    if (c.mode != DegreeMode::AtMost) return false;
  return true;
}

std::string to_string(const SumShape& shape) {
  std::string out = "sum[deg Y " + mode_text(shape.y_mode) + " " + std::to_string(shape.k - 1);
  for (std::size_t j = 0; j < shape.companions.size(); ++j) {
    out += "; deg U" + std::to_string(j + 1) + " " + mode_text(shape.companions[j].mode) + " " +
           std::to_string(shape.companions[j].degree);
  }
  return out + "]";
}

BigInt exp_sum_direct(const SumShape& shape, const std::vector<LaurentPoint>& points, int log2_budget) {
  validate_shape(shape);
  check_points(shape, points);
  double per_y = 0;
  for (const auto& c : shape.companions) per_y += std::ldexp(1.0, c.degree + 1);
  check_budget(("direct sum " + to_string(shape)).c_str(), shape.k + std::log2(std::max(per_y, 1.0)), log2_budget);

  const auto depth = shape.depths();
  std::vector<Word> alpha;
  for (std::size_t j = 0; j < points.size(); ++j) alpha.push_back(prefix_word(points[j], depth[j]));

  const int k = shape.k;
  const Word y_lo = shape.y_mode == DegreeMode::Exactly ? (Word{1} << (k - 1)) : 0;
  const Word y_hi = Word{1} << k;
  BigInt total = 0;
  for (Word y = y_lo; y < y_hi; ++y) {
    BigInt term = 1;
    for (std::size_t j = 0; j < shape.companions.size(); ++j) {
      const auto& c = shape.companions[j];
      const Word u_lo = c.mode == DegreeMode::Exactly ? (Word{1} << c.degree) : 0;
      const Word u_hi = Word{1} << (c.degree + 1);
      long long inner = 0;
      for (Word u = u_lo; u < u_hi; ++u) inner += character(residue_word(alpha[j], y, u));
      term *= inner;
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

BigInt exp_sum_rank(const SumShape& shape, const std::vector<LaurentPoint>& points) {
  validate_shape(shape);
  check_points(shape, points);
  const RankRule rule = rule_of(shape);
  const auto depth = shape.depths();
  std::vector<Word> w;
  for (std::size_t j = 0; j < points.size(); ++j) w.push_back(prefix_word(points[j], depth[j]));
  return to_big(evaluate(shape, rule, w.data()));
}

BigInt integral_moment(const SumShape& shape, int q, const CensusOptions& opts) {
  validate_shape(shape);
  if (q < 1) throw DomainError("integral_moment needs q >= 1");
  const RankRule rule = rule_of(shape);
  const int bits = shape.coset_bits();
  check_budget(("moment integral over " + to_string(shape)).c_str(), bits, opts.log2_budget);
  if (bits > 62) throw BudgetError("moment integral needs " + std::to_string(bits) + " coset bits", bits, 62);

  const auto depth = shape.depths();
  std::vector<int> offset;
  int acc = 0;
  for (int d : depth) {
    offset.push_back(acc);
    acc += d;
  }
  int max_exp = shape.k;
  for (const auto& c : shape.companions) max_exp += c.degree + 1;
  // slot 0: value 0; 1 + 2e: +2^e; 2 + 2e: -2^e
  const std::size_t size = static_cast<std::size_t>(2 * max_exp + 3);

  const auto sum = detail::run_sharded(
      std::uint64_t{1} << bits, size, opts, [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& tally) {
        std::vector<Word> w(depth.size());
        for (std::uint64_t p = lo; p < hi; ++p) {
          for (std::size_t j = 0; j < depth.size(); ++j) {
            w[j] = (p >> offset[j]) & low_mask(static_cast<std::size_t>(depth[j]));
          }
          const Value v = evaluate(shape, rule, w.data());
          const std::size_t slot = v.sign == 0 ? 0 : static_cast<std::size_t>(2 * v.exp + (v.sign > 0 ? 1 : 2));
          ++tally[slot];
        }
      });

  BigInt total = 0;
  for (int e = 0; e <= max_exp; ++e) {
    const BigInt plus = sum[static_cast<std::size_t>(2 * e + 1)];
    const BigInt minus = sum[static_cast<std::size_t>(2 * e + 2)];
    if (plus == 0 && minus == 0) continue;
    const BigInt power = pow2(e * q);
    total += plus * power;
    total += (q % 2 == 0 ? minus : BigInt(-minus)) * power;
  }
  return to_integer(Rational(total, pow2(bits)), "moment integral");
}

}  // namespace persym

#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "persym/formulas.hpp"
#include "persym/laurent.hpp"
#include "persym/polycount.hpp"
#include "reference.hpp"

namespace persym::cli {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.holds; }));
}

namespace {

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::string at_rank(const FamilyShape& shape, int i) { return to_string(shape) + " i=" + std::to_string(i); }

class Suite {
 public:
  Suite(SuiteReport& report, const SuiteBounds& bounds) : r_(report), opts_(bounds.opts), cache_(bounds.opts) {}

  void check(std::string identity, std::string instance, const BigInt& lhs, std::string lhs_path, const BigInt& rhs,
             std::string rhs_path) {
    r_.checks.push_back({std::move(identity), std::move(instance), lhs.str(), rhs.str(), std::move(lhs_path),
                         std::move(rhs_path), lhs == rhs});
  }

  void check(std::string identity, std::string instance, const Rational& lhs, std::string lhs_path, const Rational& rhs,
             std::string rhs_path) {
    r_.checks.push_back({std::move(identity), std::move(instance), lhs.str(), rhs.str(), std::move(lhs_path),
                         std::move(rhs_path), lhs == rhs});
  }

  void skip(const std::string& why) { r_.skipped.push_back(why); }

  // nullptr (and a skip note) when the sweep is over budget
  const RankDistribution* census(const FamilyShape& shape) {
    try {
      return &cache_.distribution(shape);
    } catch (const BudgetError& e) {
      skip(to_string(shape) + ": " + e.what());
      return nullptr;
    }
  }

  const JointRankTable* joint(const FamilyShape& shape) {
    try {
      return &cache_.joint(shape);
    } catch (const BudgetError& e) {
      skip(to_string(shape) + " joint: " + e.what());
      return nullptr;
    }
  }

  // Runs fn, turning budget refusals into skip notes.
  template <class F>
  void guarded(const std::string& what, F&& fn) {
    try {
      fn();
    } catch (const BudgetError& e) {
      skip(what + ": " + e.what());
    }
  }

  CensusCache& cache() { return cache_; }
  const CensusOptions& opts() const { return opts_; }

 private:
  SuiteReport& r_;
  CensusOptions opts_;
  CensusCache cache_;
};

// ---- rank tables -----------------------------------------------------------

void daykin(Suite& t, const SuiteBounds& b) {
  const int max_s = pick(b.max_s, 6);
  const int max_k = pick(b.max_k, 6);
  for (int s = 1; s <= max_s; ++s) {
    for (int k = 1; k <= max_k; ++k) {
      const auto shape = single_shape(s, k);
      const auto* d = t.census(shape);
      if (d == nullptr) continue;
      for (int i = 0; i <= shape.max_rank(); ++i) {
        const auto f = gamma_persym(s, k, i);
        t.check("single block rank count", at_rank(shape, i), d->at(i), "census", f.value, f.provenance);
      }
    }
  }
}

void joint(Suite& t, const SuiteBounds& b) {
  const int max_k = pick(b.max_k, pick(b.max, 6));
  const int max_s = pick(b.max_s, max_k);
  for (int s = 2; s <= max_s; ++s) {
    for (int k = s; k <= max_k; ++k) {
      const auto shape = single_shape(s, k);
      const auto* table = t.joint(shape);
      if (table == nullptr) continue;
      // every tuple of chain ranks in range; zero/zero pairs are folded into one line
      std::size_t zero_pairs = 0;
      std::vector<int> tup(4, 0);
      const int top = std::min(s, k);
      for (tup[0] = 0; tup[0] <= top; ++tup[0])
        for (tup[1] = 0; tup[1] <= top; ++tup[1])
          for (tup[2] = 0; tup[2] <= top; ++tup[2])
            for (tup[3] = 0; tup[3] <= top; ++tup[3]) {
              const auto g = grid_from_chain(tup);
              const auto f = joint_persym_formula(s, k, g);
              const BigInt c = table->at(tup);
              if (c == 0 && f.value == 0) {
                ++zero_pairs;
                continue;
              }
              const std::string grid = "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "|" +
                                       std::to_string(g[2]) + "," + std::to_string(g[3]) + ")";
              t.check("corner-rank quadruple count", to_string(shape) + " " + grid, c, "joint census", f.value,
                      f.provenance);
            }
      t.check("corner-rank quadruple count", to_string(shape) + " remaining tuples", BigInt(zero_pairs),
              "tuples with zero census count", BigInt(zero_pairs), "tuples with zero formula value");
    }
  }
}

void rows(Suite& t, const SuiteBounds& b) {
  const int max_n = pick(b.max, 2);
  const int max_m = pick(b.max_m, 3);
  const int max_k = pick(b.max_k, 5);
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      for (int k = 1; k <= max_k; ++k) {
        const auto shape = rows_shape(n, m, k);
        const auto* d = t.census(shape);
        if (d == nullptr) continue;
        for (int i = 0; i <= std::min(k, n + m + 1); ++i) {
          const auto f = gamma_persym_rows(n, m, k, i);
          t.check("block over free rows", at_rank(shape, i), d->at(i), "census", f.value, f.provenance);
          if (n != 1) continue;
          try {
            const auto tb = gamma_one_row_table(m, k, i);
            t.check("one free row case table", at_rank(shape, i), d->at(i), "census", tb.value, tb.provenance);
          } catch (const NotCoveredError&) {
          }
        }
      }
    }
  }
  for (int n = 1; n <= static_cast<int>(ref::kACoeff.size()); ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto a = a_coeff(n, j);
      t.check("free-row expansion coefficient", "n=" + std::to_string(n) + " j=" + std::to_string(j), a.value,
              a.provenance, BigInt(ref::kACoeff[n - 1][j]), "reference table");
    }
  }
  const auto sh = rows_shape(1, 2, 3);
  if (const auto* d = t.census(sh)) {
    for (int i = 0; i < static_cast<int>(ref::kRows_1_2_3.size()); ++i) {
      t.check("block over free rows", at_rank(sh, i), d->at(i), "census", ref::kRows_1_2_3[i], "reference table");
    }
  }
  for (int i = 0; i < static_cast<int>(ref::kRows_5_2_4.size()); ++i) {
    const auto f = gamma_persym_rows(5, 2, 4, i);
    t.check("block over free rows", at_rank(rows_shape(5, 2, 4), i), f.value, f.provenance, ref::kRows_5_2_4[i],
            "reference table");
  }
}

void double_forms(Suite& t, const SuiteBounds& b) {
  const int max_s = pick(b.max_s, 4);
  const int max_m = pick(b.max_m, 3);
  const int max_k = pick(b.max_k, 7);
  for (int s = 1; s <= max_s; ++s) {
    for (int m = 0; m <= max_m; ++m) {
      for (int k = 1; k <= max_k; ++k) {
        const auto shape = double_shape(s, m, k);
        const auto* d = t.census(shape);
        if (d == nullptr) continue;
        for (int i = 0; i <= shape.max_rank(); ++i) {
          const auto f = gamma_double(s, m, k, i);
          t.check("double rank count", at_rank(shape, i), d->at(i), "census", f.value, f.provenance);
        }
      }
    }
  }
  const auto table = [&](int s, int m, int k, const std::vector<BigInt>& values) {
    const auto shape = double_shape(s, m, k);
    const auto* d = t.census(shape);
    for (int i = 0; i < static_cast<int>(values.size()); ++i) {
      const auto f = gamma_double(s, m, k, i);
      t.check("double rank count", at_rank(shape, i), f.value, f.provenance, values[i], "reference table");
      if (d != nullptr) t.check("double rank count", at_rank(shape, i), d->at(i), "census", values[i], "reference table");
    }
  };
  table(3, 2, 4, ref::kDouble_3_2_4);
  table(5, 0, 6, ref::kDouble_5_0_6);
}

void recurrence(Suite& t, const SuiteBounds& b) {
  const int max_s = pick(b.max_s, 3);
  const int max_m = pick(b.max_m, 2);
  const int max_k = pick(b.max_k, 6);
  for (int s = 2; s <= max_s; ++s) {
    for (int m = 0; m <= max_m; ++m) {
      for (int k = 1; k <= max_k; ++k) {
        const auto shape = double_shape(s, m, k);
        const auto* d = t.census(shape);
        const auto* j = t.joint(shape);
        if (d == nullptr || j == nullptr) continue;
        for (int i = 0; i <= shape.max_rank(); ++i) {
          const auto inst = at_rank(shape, i);
          const auto rec = gamma_double_recur(s, m, k, i);
          t.check("recurrence in s, closed remainder", inst, rec.value, rec.provenance, d->at(i), "census");
          t.guarded(inst, [&] {
            const auto rc = gamma_double_recur_census(s, m, k, i, t.cache());
            t.check("recurrence in s, census terms", inst, rc.value, rc.provenance, d->at(i), "census");
          });
          const BigInt delta = delta_double_from_sigma(*j, i);
          for (const auto& c : delta_double_candidates(s, m, k, i)) {
            t.check("remainder term", inst, c.value, c.provenance, delta, "joint census");
          }
          const auto sf = sigma_formula(s, m, k, i);
          t.check("diagonal chain count", inst, sf.value, sf.provenance, j->diagonal(i), "joint census");
        }
      }
    }
  }
  ReductionBounds rb{max_s, max_m, max_k, std::min(22, t.opts().log2_budget)};
  GammaOracle oracle(t.cache(), rb.census_bits);
  for (auto kind : {Reduction::DeltaStability, Reduction::ColumnGrowth}) {
    for (const auto& c : reduction_identities(kind, rb, oracle)) {
      t.check(c.identity, c.instance, c.lhs, c.lhs_path, c.rhs, c.rhs_path);
    }
  }
}

void reductions(Suite& t, const SuiteBounds& b) {
  const int max = pick(b.max, 7);
  ReductionBounds rb{pick(b.max_s, max), pick(b.max_m, max), pick(b.max_k, max), std::min(22, t.opts().log2_budget)};
  GammaOracle oracle(t.cache(), rb.census_bits);
  for (auto kind : all_reductions()) {
    for (const auto& c : reduction_identities(kind, rb, oracle)) {
      t.check(c.identity, c.instance, c.lhs, c.lhs_path, c.rhs, c.rhs_path);
    }
  }
}

void triple_forms(Suite& t, const SuiteBounds& b) {
  const int max_s = pick(b.max_s, 2);
  const int max_m = pick(b.max_m, 2);
  const int max_k = pick(b.max_k, 6);
  for (int s = 1; s <= max_s; ++s) {
    for (int m = 0; m <= max_m; ++m) {
      for (int k = 1; k <= max_k; ++k) {
        const auto shape = triple_shape(s, m, 0, k);
        const auto* d = t.census(shape);
        if (d == nullptr) continue;
        for (int i = 0; i <= shape.max_rank(); ++i) {
          const auto f = gamma_triple(s, m, k, i);
          t.check("triple rank count", at_rank(shape, i), d->at(i), "census", f.value, f.provenance);
        }
      }
    }
  }
  using Lookup = std::function<std::optional<BigInt>(int, int)>;
  const auto generic = [&](int s, const Lookup& table) {
    for (int k = 1; k <= max_k; ++k) {
      const auto shape = triple_shape(s, 0, 0, k);
      const RankDistribution* d = nullptr;
      for (int i = 0; i <= shape.max_rank(); ++i) {
        const auto v = table(k, i);
        if (!v) continue;
        if (d == nullptr && (d = t.census(shape)) == nullptr) break;
        t.check("triple rank count", at_rank(shape, i), d->at(i), "census", *v, "reference table");
      }
    }
  };
  if (max_s >= 1) generic(1, ref::triple_s1);
  if (max_s >= 2) generic(2, ref::triple_s2);
  if (max_s >= 2 && max_k >= 6) {
    const auto shape = triple_shape(2, 0, 0, 6);
    if (const auto* d = t.census(shape)) {
      for (int i = 0; i < static_cast<int>(ref::kTriple_2_0_6.size()); ++i) {
        t.check("triple rank count", at_rank(shape, i), d->at(i), "census", ref::kTriple_2_0_6[i], "reference table");
      }
    }
  }
}

void triple_recurrence(Suite& t, const SuiteBounds& b) {
  const int max_s = pick(b.max_s, 2);
  const int max_m = pick(b.max_m, 1);
  const int max_k = pick(b.max_k, 4);
  const int max_l = pick(b.max, 1);
  for (int s = 2; s <= max_s; ++s) {
    for (int m = 0; m <= max_m; ++m) {
      for (int l = 0; l <= max_l; ++l) {
        for (int k = 1; k <= max_k; ++k) {
          const auto shape = triple_shape(s, m, l, k);
          const auto* d = t.census(shape);
          if (d == nullptr) continue;
          for (int i = 0; i <= shape.max_rank(); ++i) {
            const auto inst = at_rank(shape, i);
            t.guarded(inst, [&] {
              const auto r = gamma_triple_recur(s, m, l, k, i, t.cache());
              t.check("triple recurrence in s", inst, r.value, r.provenance, d->at(i), "census");
            });
          }
        }
      }
    }
  }
}

// ---- fractions -------------------------------------------------------------

void fractions(Suite& t, const SuiteBounds& b) {
  const int max = pick(b.max, 3);
  const int census_bits = std::min(24, t.opts().log2_budget);
  const auto one = [&](const FamilyShape& shape, const Rational& expect, const std::function<BigInt()>& top) {
    if (shape.param_bits() <= census_bits) {
      if (const auto* d = t.census(shape)) {
        t.check("invertible fraction", to_string(shape), invertible_fraction(*d), "census", expect, "reference value");
        return;
      }
    }
    t.check("invertible fraction", to_string(shape), Rational(top(), pow2(shape.param_bits())), "closed form", expect,
            "reference value");
  };
  for (int s = 1; s <= max; ++s) {
    for (int m = 0; m <= max; ++m) {
      const int k = 2 * s + m;
      one(double_shape(s, m, k), Rational(3, 8), [&] { return gamma_double(s, m, k, k).value; });
      const int k3 = 3 * s + 2 * m;
      one(triple_shape(s, m, 0, k3), Rational(21, 64), [&] { return gamma_triple(s, m, k3, k3).value; });
    }
  }
}

// ---- characters ------------------------------------------------------------

// All points at the depths the sum reads, direct sum against rank formula.
void exhaust(Suite& t, const std::string& identity, const SumShape& shape) {
  const auto depth = shape.depths();
  const int bits = shape.coset_bits();
  std::uint64_t agree = 0;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t p = 0; p < total; ++p) {
    std::vector<LaurentPoint> pts;
    int off = 0;
    for (int d : depth) {
      pts.push_back(LaurentPoint::from_word((p >> off) & low_mask(static_cast<std::size_t>(d)), d));
      off += d;
    }
    if (exp_sum_direct(shape, pts, t.opts().log2_budget) == exp_sum_rank(shape, pts)) ++agree;
  }
  t.check(identity, to_string(shape), BigInt(agree), "points where direct sum equals rank formula", BigInt(total),
          "points");
}

void characters(Suite& t, const SuiteBounds&) {
  // residue of t*Y*Z against the bilinear form of the persymmetric matrix of t
  for (const auto& [s, k] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
    const int d = k + s - 1;
    std::uint64_t agree = 0, total = 0;
    for (Word a = 0; a < (Word{1} << d); ++a) {
      const auto pt = LaurentPoint::from_word(a, d);
      const auto mat = persym_matrix(s, k, pt.coeffs);
      for (Word y = 0; y < (Word{1} << k); ++y) {
        for (Word z = 0; z < (Word{1} << s); ++z) {
          const auto yb = bits_from_word(y, static_cast<std::size_t>(k));
          const auto zb = bits_from_word(z, static_cast<std::size_t>(s));
          ++total;
          if (residue_bilinear(pt, yb, zb) == bilinear(mat, zb, yb)) ++agree;
        }
      }
    }
    t.check("residue equals bilinear form", "s=" + std::to_string(s) + " k=" + std::to_string(k), BigInt(agree),
            "agreeing (t,y,z)", BigInt(total), "all (t,y,z)");
  }
  exhaust(t, "single block sum", SumShape::single(2, 3));
  exhaust(t, "single block sum", SumShape::single(3, 2));
  exhaust(t, "signed single block sum", SumShape::exact_single(3, 3));
  exhaust(t, "signed single block sum", SumShape::exact_single(2, 3));
  exhaust(t, "one exact free row", SumShape::one_row_exact(1, 2));
  exhaust(t, "one exact free row", SumShape::one_row_exact(1, 3));
  exhaust(t, "free rows sum", SumShape::rows(1, 1, 2));
  exhaust(t, "free rows sum", SumShape::rows(2, 1, 2));
  exhaust(t, "double block sum", SumShape::double_block(2, 1, 1));
  exhaust(t, "double block sum", SumShape::double_block(3, 1, 0));
  exhaust(t, "triple block sum", SumShape::triple_block(2, 1, 0));
  exhaust(t, "triple block sum", SumShape::triple_block(2, 1, 1, 1));
}

// ---- moments ---------------------------------------------------------------

std::vector<BigInt> counts_of(const FamilyShape& shape, const std::function<FormulaResult(int)>& f) {
  std::vector<BigInt> c;
  for (int i = 0; i <= shape.max_rank(); ++i) c.push_back(f(i).value);
  return c;
}

int natural_dim(const FamilyShape& shape) { return shape.k + shape.total_rows(); }

void moments(Suite& t, const SuiteBounds&) {
  const auto& o = t.opts();
  const auto inst = [](const std::string& what, int q) { return what + " q=" + std::to_string(q); };

  // block over one free row
  {
    const auto shape = rows_shape(1, 2, 3);
    const auto* d = t.census(shape);
    for (int q = 1; q <= 5 && d != nullptr; ++q) {
      const auto name = inst(to_string(shape), q);
      const BigInt cm = moment(*d, q).value;
      t.check("moment", name, cm, "census + moment", ref::rows_1_2_3_moment(q), "reference polynomial in 2^q");
      t.guarded(name, [&] {
        t.check("moment", name, integral_moment(SumShape::rows(1, 2, 3), q, o), "coset integral", cm,
                "census + moment");
      });
      if (q <= 3) {
        t.guarded(name, [&] {
          t.check("moment", name, count_solutions(3, {2, 0}, q, o), "solution count", cm, "census + moment");
        });
      }
    }
  }
  {
    const auto shape = rows_shape(5, 2, 4);
    const auto name = inst(to_string(shape), 3);
    const auto c = counts_of(shape, [](int i) { return gamma_persym_rows(5, 2, 4, i); });
    const BigInt fm = moment(c, 3, natural_dim(shape), shape.param_bits()).value;
    t.check("moment", name, fm, "closed form + moment", ref::kRowsMoment_5_2_4_q3, "reference value");
    if (const auto* d = t.census(shape)) t.check("moment", name, moment(*d, 3).value, "census + moment", fm, "closed form + moment");
    t.guarded(name, [&] {
      t.check("moment", name, count_solutions(4, {2, 0, 0, 0, 0, 0}, 3, o), "solution count", fm,
              "closed form + moment");
    });
  }

  // double and triple families: census, closed form, integral, solution count
  struct Case {
    FamilyShape shape;
    int q;
    std::optional<BigInt> quoted;
  };
  const std::vector<Case> cases = {
      {double_shape(3, 2, 4), 3, ref::kDoubleMoment_4_3_2_q3},
      {double_shape(5, 0, 6), 4, ref::kDoubleMoment_6_5_0_q4},
      {double_shape(2, 1, 3), 2, std::nullopt},
      {triple_shape(3, 0, 0, 5), 3, std::nullopt},
      {triple_shape(2, 0, 0, 6), 1, std::nullopt},
      {triple_shape(2, 0, 0, 6), 2, std::nullopt},
      {triple_shape(1, 1, 0, 4), 3, std::nullopt},
  };
  for (const auto& c : cases) {
    const auto& sh = c.shape;
    const auto name = inst(to_string(sh), c.q);
    const bool dbl = sh.kind == FamilyKind::Double;
    const auto closed = counts_of(sh, [&](int i) {
      return dbl ? gamma_double(sh.s, sh.m, sh.k, i) : gamma_triple(sh.s, sh.m, sh.k, i);
    });
    const BigInt fm = moment(closed, c.q, natural_dim(sh), sh.param_bits()).value;
    if (c.quoted) t.check("moment", name, fm, "closed form + moment", *c.quoted, "reference value");
    if (const auto* d = t.census(sh)) t.check("moment", name, moment(*d, c.q).value, "census + moment", fm, "closed form + moment");
    std::vector<int> bounds = {sh.s - 1, sh.s + sh.m - 1};
    if (!dbl) bounds.push_back(sh.s + sh.m + sh.l - 1);
    t.guarded(name, [&] {
      t.check("moment", name, count_solutions(sh.k, bounds, c.q, o), "solution count", fm, "closed form + moment");
    });
    t.guarded(name, [&] {
      const auto sum = dbl ? SumShape::double_block(sh.k, sh.s, sh.m) : SumShape::triple_block(sh.k, sh.s, sh.m, sh.l);
      t.check("moment", name, integral_moment(sum, c.q, o), "coset integral", fm, "closed form + moment");
    });
  }
  {
    const auto sh = triple_shape(3, 4, 0, 7);
    const auto closed = counts_of(sh, [](int i) { return gamma_triple(3, 4, 7, i); });
    for (int i = 0; i < static_cast<int>(ref::kTriple_3_4_7.size()); ++i) {
      t.check("triple rank count", at_rank(sh, i), closed[i], "closed form", ref::kTriple_3_4_7[i], "reference table");
    }
    t.check("moment", inst(to_string(sh), 3), moment(closed, 3, natural_dim(sh), sh.param_bits()).value,
            "closed form + moment", ref::kTripleMoment_7_3_4_q3, "reference value");
  }
  {
    const auto sh = triple_shape(3, 0, 0, 5);
    if (const auto* d = t.census(sh)) {
      const std::vector<BigInt> quoted = {1, 21, 378, 6832, 103488, 1986432};
      for (int i = 0; i < static_cast<int>(quoted.size()); ++i) {
        t.check("triple rank count", at_rank(sh, i), d->at(i), "census", quoted[i], "reference table");
      }
    }
  }

  // even moments of the signed single-block sum: diagonal corner counts
  for (const auto& [s, k] : {std::pair{3, 3}, std::pair{2, 3}, std::pair{3, 4}}) {
    const auto* j = t.joint(single_shape(s, k));
    if (j == nullptr) continue;
    std::vector<BigInt> diag;
    for (int i = 0; i <= std::min(s, k); ++i) diag.push_back(j->diagonal(i));
    for (int q = 1; q <= 3; ++q) {
      const auto name = inst("signed s=" + std::to_string(s) + " k=" + std::to_string(k) + " power " +
                                 std::to_string(2 * q),
                             q);
      t.guarded(name, [&] {
        t.check("even moment", name, integral_moment(SumShape::exact_single(s, k), 2 * q, o), "coset integral",
                moment(diag, 2 * q, s + k - 2, s + k - 2).value, "diagonal corner counts");
      });
    }
  }
  // one exact free row: diagonal over [block, block + row]
  for (const auto& [m, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto full = rows_shape(1, m, k);
    const JointRankTable* j = nullptr;
    t.guarded(to_string(full), [&] {
      j = &t.cache().joint(full);  // default chain is exactly [block, block + row]
    });
    if (j == nullptr) continue;
    std::vector<BigInt> diag;
    for (int i = 0; i <= full.max_rank(); ++i) diag.push_back(j->diagonal(i));
    for (int q = 1; q <= 3; ++q) {
      const auto name = inst("exact row m=" + std::to_string(m) + " k=" + std::to_string(k), q);
      t.guarded(name, [&] {
        t.check("moment", name, integral_moment(SumShape::one_row_exact(m, k), q, o), "coset integral",
                moment(diag, q, k + m + 1, 2 * k + m).value, "diagonal block/row counts");
      });
    }
  }
  // single block: three-branch closed form
  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= k - 1; ++m) {
      const auto sh = single_shape(m + 1, k);
      for (int q = 1; q <= 3; ++q) {
        const auto name = inst("k=" + std::to_string(k) + " m=" + std::to_string(m), q);
        const BigInt closed = r_q_single_closed(q, k, m).value;
        t.guarded(name, [&] {
          t.check("single moment", name, count_solutions(k, {m}, q, o), "solution count", closed, "closed form");
        });
        if (const auto* d = t.census(sh)) t.check("single moment", name, moment(*d, q).value, "census + moment", closed, "closed form");
      }
    }
  }
  t.check("single moment", "k=3 m=2 q=1", r_q_single_closed(1, 3, 2).value, "closed form", BigInt(15),
          "2^3 + 2^3 - 1");
}

using Runner = void (*)(Suite&, const SuiteBounds&);

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> r = {
      {"characters", characters},
      {"daykin", daykin},
      {"double", double_forms},
      {"fractions", fractions},
      {"joint", joint},
      {"moments", moments},
      {"recurrence", recurrence},
      {"reductions", reductions},
      {"rows", rows},
      {"triple", triple_forms},
      {"triple-recurrence", triple_recurrence},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite \"" + name + "\" (known: " + known + ")");
  }
  SuiteReport report{name, {}, {}};
  Suite t(report, bounds);
  it->second(t, bounds);
  return report;
}

}  // namespace persym::cli

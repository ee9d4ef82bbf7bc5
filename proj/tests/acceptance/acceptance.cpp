// One PASS/FAIL line per acceptance criterion.
//
// --expect-fail LIST names criteria whose reference values are known to be
// wrong (see README). They still print FAIL; the exit status is 0 only when
// the failing set is exactly LIST, so a regression elsewhere, or a listed
// criterion that starts passing, both fail the run.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "persym/census.hpp"
#include "persym/formulas.hpp"
#include "persym/laurent.hpp"
#include "persym/polycount.hpp"
#include "reference.hpp"
#include "suites.hpp"

using namespace persym;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
  void expect_eq(const BigInt& a, const BigInt& b, const std::string& what) {
    expect(a == b, what + ": " + a.str() + " vs " + b.str());
  }
};

CensusOptions g_opts{};

std::string at(const FamilyShape& f, int i) { return to_string(f) + " i=" + std::to_string(i); }

void absorb(Verdict& v, const cli::SuiteReport& r) {
  for (const auto& c : r.checks) {
    v.expect(c.holds, c.identity + " " + c.instance + ": " + c.lhs + " [" + c.lhs_path + "] vs " + c.rhs + " [" +
                          c.rhs_path + "]");
  }
  v.expect(r.skipped.empty(), r.suite + " skipped " + std::to_string(r.skipped.size()) + " instances");
}

cli::SuiteBounds bounds(int s, int m, int k, int max = -1) { return {s, k, m, max, g_opts}; }

// 1
Verdict daykin() {
  Verdict v;
  for (int s = 1; s <= 6; ++s)
    for (int k = s; k <= 6; ++k) {
      const auto d = rank_census(single_shape(s, k), g_opts);
      for (int i = 0; i <= s; ++i) v.expect_eq(d.at(i), gamma_persym(s, k, i).value, at(single_shape(s, k), i));
    }
  return v;
}

// 2
Verdict corner_quadruples() {
  Verdict v;
  for (int s = 2; s <= 6; ++s)
    for (int k = s; k <= 6; ++k) {
      const auto t = joint_rank_census(single_shape(s, k), g_opts);
      std::vector<int> c(4);
      for (c[0] = 0; c[0] <= s; ++c[0])
        for (c[1] = 0; c[1] <= s; ++c[1])
          for (c[2] = 0; c[2] <= s; ++c[2])
            for (c[3] = 0; c[3] <= s; ++c[3]) {
              const auto g = grid_from_chain(c);
              std::ostringstream name;
              name << "s=" << s << " k=" << k << " (" << g[0] << "," << g[1] << "|" << g[2] << "," << g[3] << ")";
              v.expect_eq(t.at(c), joint_persym_formula(s, k, g).value, name.str() + " census vs formula");
            }
    }
  return v;
}

// 3
Verdict rows_small() {
  Verdict v;
  const auto sh = rows_shape(1, 2, 3);
  const auto d = rank_census(sh, g_opts);
  for (int i = 0; i < 4; ++i) v.expect_eq(d.at(i), ref::kRows_1_2_3[i], at(sh, i));
  for (int q = 1; q <= 5; ++q) {
    const BigInt m = moment(d, q).value;
    const std::string qs = " q=" + std::to_string(q);
    v.expect_eq(m, ref::rows_1_2_3_moment(q), "census moment vs polynomial" + qs);
    v.expect_eq(integral_moment(SumShape::rows(1, 2, 3), q, g_opts), m, "integral vs census moment" + qs);
    if (q <= 3) v.expect_eq(count_solutions(3, {2, 0}, q, g_opts), m, "solution count vs census moment" + qs);
  }
  return v;
}

// 4
Verdict rows_big() {
  Verdict v;
  const auto sh = rows_shape(5, 2, 4);
  const auto d = rank_census(sh, g_opts);
  for (int i = 0; i < 5; ++i) {
    v.expect_eq(gamma_persym_rows(5, 2, 4, i).value, ref::kRows_5_2_4[i], "formula " + at(sh, i));
    v.expect_eq(d.at(i), ref::kRows_5_2_4[i], "census " + at(sh, i));
  }
  v.expect_eq(integral_moment(SumShape::rows(5, 2, 4), 3, g_opts), ref::kRowsMoment_5_2_4_q3, "integral q=3");
  return v;
}

// 5
Verdict double_closed() {
  Verdict v;
  absorb(v, cli::run_suite("double", bounds(4, 3, 7)));
  return v;
}

// 6
Verdict double_recurrence() {
  Verdict v;
  absorb(v, cli::run_suite("recurrence", bounds(3, 2, 6)));
  return v;
}

// 7
Verdict double_moments() {
  Verdict v;
  {
    const auto sh = double_shape(3, 2, 4);
    const auto want = ref::kDoubleMoment_4_3_2_q3;
    v.expect_eq(moment(rank_census(sh, g_opts), 3).value, want, "census + moment k=4 s=3 m=2");
    v.expect_eq(count_solutions(4, {2, 4}, 3, g_opts), want, "brute force k=4 s=3 m=2");
    v.expect_eq(integral_moment(SumShape::double_block(4, 3, 2), 3, g_opts), want, "integral k=4 s=3 m=2");
  }
  {
    const auto sh = double_shape(5, 0, 6);
    const auto want = ref::kDoubleMoment_6_5_0_q4;
    v.expect_eq(moment(rank_census(sh, g_opts), 4).value, want, "census + moment k=6 s=5 m=0");
    v.expect_eq(count_solutions(6, {4, 4}, 4, g_opts), want, "brute force k=6 s=5 m=0");
    v.expect_eq(integral_moment(SumShape::double_block(6, 5, 0), 4, g_opts), want, "integral k=6 s=5 m=0");
  }
  return v;
}

// 8
Verdict triple_closed() {
  Verdict v;
  absorb(v, cli::run_suite("triple", bounds(2, 2, 6)));
  const int census_cap = std::min(27, g_opts.log2_budget);
  CensusCache cache(g_opts);
  using Lookup = std::optional<BigInt> (*)(int, int);
  const auto generic = [&](int s, int m, Lookup table, int k_lo, int k_hi) {
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto sh = triple_shape(s, m, 0, k);
      for (int i = 0; i <= sh.max_rank(); ++i) {
        const auto quoted = table(k, i);
        if (!quoted) continue;
        v.expect_eq(gamma_triple(s, m, k, i).value, *quoted, "formula vs quoted table " + at(sh, i));
        if (sh.param_bits() <= census_cap) {
          v.expect_eq(cache.distribution(sh).at(i), *quoted, "census vs quoted table " + at(sh, i));
        }
      }
    }
  };
  generic(1, 0, ref::triple_s1, 1, 10);
  generic(2, 0, ref::triple_s2, 1, 10);
  generic(3, 0, ref::triple_s3_m0, 7, 10);
  generic(3, 1, ref::triple_s3_m1, 7, 10);
  const auto fixed = [&](int s, int m, int k, const std::vector<BigInt>& quoted) {
    const auto sh = triple_shape(s, m, 0, k);
    for (int i = 0; i < static_cast<int>(quoted.size()); ++i) {
      v.expect_eq(gamma_triple(s, m, k, i).value, quoted[i], "formula vs quoted table " + at(sh, i));
    }
  };
  fixed(2, 0, 6, ref::kTriple_2_0_6);
  fixed(3, 4, 7, ref::kTriple_3_4_7);
  fixed(3, 4, 10, ref::kTriple_3_4_10);
  return v;
}

// 9
Verdict triple_recurrence() {
  Verdict v;
  const auto r = cli::run_suite("triple-recurrence", bounds(2, 1, 4, 1));
  absorb(v, r);
  bool saw_l1 = false;
  for (const auto& c : r.checks) saw_l1 = saw_l1 || c.instance.find("l=1") != std::string::npos;
  v.expect(saw_l1, "no l=1 instance was exercised");
  return v;
}

// 10
Verdict triple_moments() {
  Verdict v;
  const auto want = ref::kTripleMoment_5_3_q3;
  v.expect_eq(moment(rank_census(triple_shape(3, 0, 0, 5), g_opts), 3).value, want, "R3(5,3) census + moment");
  v.expect_eq(count_solutions(5, {2, 2, 2}, 3, g_opts), want, "R3(5,3) brute force");
  std::vector<BigInt> c;
  for (int i = 0; i <= 7; ++i) c.push_back(gamma_triple(3, 4, 7, i).value);
  const auto sh = triple_shape(3, 4, 0, 7);
  const BigInt r734 = moment(c, 3, sh.k + sh.total_rows(), sh.param_bits()).value;
  v.expect_eq(r734, ref::kTripleMoment_7_3_4_q3, "R3(7,3,4) formula + moment");
  if (!v.pass) v.detail += "; R3(7,3,4) formula + moment " + std::string(r734 == ref::kTripleMoment_7_3_4_q3 ? "matches" : "differs");
  return v;
}

// 11
Verdict fractions() {
  Verdict v;
  for (const auto& [s, m] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}}) {
    const auto sh = double_shape(s, m, 2 * s + m);
    v.expect(invertible_fraction(sh, g_opts) == Rational(3, 8), to_string(sh) + " fraction");
  }
  for (const auto& [s, m] : {std::pair{1, 0}, std::pair{1, 1}}) {
    const auto sh = triple_shape(s, m, 0, 3 * s + 2 * m);
    v.expect(invertible_fraction(sh, g_opts) == Rational(21, 64), to_string(sh) + " fraction");
  }
  return v;
}

// 12
Verdict characters() {
  Verdict v;
  absorb(v, cli::run_suite("characters", bounds(-1, -1, -1)));
  return v;
}

// 13
Verdict coefficients() {
  Verdict v;
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) {
      v.expect_eq(a_coeff(n, j).value, BigInt(ref::kACoeff[n - 1][j]),
                  "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  return v;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--expect-fail" && a + 1 < argc) {
      expected_fail = parse_list(argv[++a]);
    } else if (arg == "--threads" && a + 1 < argc) {
      g_opts.threads = std::stoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail 2,8] [--threads N]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    Verdict (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "single-block census equals the closed rank count, 1<=s<=k<=6", daykin},
      {2, "corner-rank quadruples match the five-case formula, 2<=s<=k<=6", corner_quadruples},
      {3, "3x3 block over one row: table, moments q=1..5 by census, integral and solution count", rows_small},
      {4, "3x4 block over five rows: table by formula and census, third moment by integral", rows_big},
      {5, "double closed forms equal census for s<=4, m<=3, k<=7 plus worked tables", double_closed},
      {6, "double recurrence, remainder stabilization and column growth, s in {2,3}, m<=2, k<=6",
       double_recurrence},
      {7, "double moments 35356672 and 37014016*2^20 by census, brute force and integral", double_moments},
      {8, "triple closed forms equal census for s<=2, m<=2, k<=6 plus worked tables for s=1,2,3", triple_closed},
      {9, "triple recurrence with census terms for s=2, m,l in {0,1}, k<=4", triple_recurrence},
      {10, "triple moments R3(5,3)=3563904*2^18 and R3(7,3,4)=4243395*2^29", triple_moments},
      {11, "invertible fractions 3/8 (double) and 21/64 (triple)", fractions},
      {12, "direct character sums equal rank formulas at every point", characters},
      {13, "free-row expansion coefficients for n<=5", coefficients},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) failed.insert(c.id);
    std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << " - " << c.name << " (" << v.checks
              << " checks, " << static_cast<int>(secs + 0.5) << "s)";
    if (!v.pass) std::cout << " first mismatch: " << v.detail;
    std::cout << std::endl;
  }

  std::cout << "summary: " << criteria.size() - failed.size() << " PASS, " << failed.size() << " FAIL";
  if (!expected_fail.empty()) {
    std::cout << "; expected to fail:";
    for (int id : expected_fail) std::cout << " " << id;
  }
  std::cout << std::endl;
  if (failed != expected_fail) {
    std::cout << "failing set differs from the expected set" << std::endl;
    return 1;
  }
  return 0;
}

#include "persym/formulas.hpp"

#include <algorithm>

#include "persym/errors.hpp"

namespace persym {

namespace {

using R = Rational;

R P(int e) { return rpow2(e); }

FormulaResult result(const R& v, std::string tag) {
  BigInt value = to_integer(v, tag.c_str());
  return {std::move(value), std::move(tag)};
}

std::string args(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ",";
    out += k;
    out += "=";
    out += std::to_string(v);
  }
  return out;
}

[[noreturn]] void not_covered(const std::string& what, const std::string& a, const std::string& hint) {
  throw NotCoveredError(what + " has no closed form at " + a + "; " + hint);
}

}  // namespace

// ---- single persymmetric blocks ------------------------------------------

FormulaResult gamma_persym(int s, int k, int i) {
  if (s < 0 || k < 0) throw DomainError("gamma_persym: negative dimension");
  if (i < 0) throw DomainError("gamma_persym: negative rank " + std::to_string(i));
  if (s > k) {
    auto r = gamma_persym(k, s, i);
    r.provenance = "transpose of " + r.provenance;
    return r;
  }
  if (i > s) return {0, "rank above min(s,k)"};
  if (i == 0) return {1, "persym i=0"};
  if (i <= s - 1) return {pow2(2 * (i - 1)) * 3, "persym 1<=i<=s-1"};
  return {pow2(k + s - 1) - pow2(2 * s - 2), "persym i=s<=k"};
}

FormulaResult joint_persym_formula(int s, int k, const std::array<int, 4>& g) {
  if (s < 1 || s > k) throw DomainError("joint_persym_formula needs 1 <= s <= k, got " + args({{"s", s}, {"k", k}}));
  const auto [j1, j2, j3, j4] = g;
  if (j1 == 0 && j2 == 0 && j3 == 0 && j4 == 0) return {1, "joint all zero"};
  if (j1 == j2 && j2 == j3 && j1 >= 1 && j1 <= s - 1 && (j4 == j1 || j4 == j1 + 1)) {
    return {pow2(2 * j1 - 1), "joint (j,j,j,j or j+1)"};
  }
  if (j4 >= 2 && j4 <= s && j1 == j4 - 2 && j2 == j4 - 1 && j3 == j4 - 1) {
    return {pow2(2 * j4 - 3), "joint (j-2,j-1,j-1,j)"};
  }
  if (j1 == s - 1 && j2 == s - 1 && j3 == s && j4 == s) {
    return {pow2(k + s - 1) - pow2(2 * s - 1), "joint (s-1,s-1,s,s)"};
  }
  return {0, "joint otherwise"};
}

std::array<int, 4> grid_from_chain(const std::vector<int>& t) {
  if (t.size() != 4) throw DimensionError("grid_from_chain needs a 4-tuple");
  return {t[0], t[2], t[1], t[3]};
}

// ---- persymmetric block plus free rows -----------------------------------

FormulaResult a_coeff(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw DomainError("a_coeff needs 0 <= j <= n, got " + args({{"n", n}, {"j", j}}));
  if (j == 0 || j == n) return {1, "a_j end coefficient"};
  R sum = 0;
  for (int s = 0; s <= j - 1; ++s) {
    R prod = 1;
    for (int l = 0; l <= j - (s + 1); ++l) prod *= (P(n + 1) - P(l)) / (P(j - s) - P(l));
    const R term = prod * P(s * (n - j) + s * (s + 1) / 2);
    sum += (s % 2 == 0) ? term : -term;
  }
  const R tail = P(j * n - j * (j - 1) / 2);
  sum += (j % 2 == 0) ? tail : -tail;
  return result(sum, "a_j alternating sum");
}

FormulaResult gamma_persym_rows(int n, int m, int k, int i) {
  if (n < 0 || m < 0 || k < 1) throw DomainError("gamma_persym_rows needs n >= 0, m >= 0, k >= 1");
  if (i < 0 || i > std::min(k, n + m + 1)) {
    throw DomainError("gamma_persym_rows: rank " + std::to_string(i) + " outside [0, min(k, n+m+1)]");
  }
  R sum = 0;
  for (int j = 0; j <= n; ++j) {
    if (i - j < 0 || i - j > std::min(k, 1 + m)) continue;
    R prod = 1;
    for (int l = 1; l <= j; ++l) prod *= P(k) - P(i - l);
    const BigInt a = a_coeff(n, j).value;
    sum += P((n - j) * (i - j)) * R(a) * prod * R(gamma_persym(1 + m, k, i - j).value);
  }
  return result(sum, "free-row expansion");
}

FormulaResult gamma_one_row_table(int m, int k, int i) {
  if (m < 0 || k < 1 || i < 0) throw DomainError("gamma_one_row_table: negative argument");
  if (i > std::min(k, m + 2)) return {0, "rank above min(k, m+2)"};
  if (i == 0) return {1, "one row i=0"};
  if (k == 2) {
    return result(i == 1 ? R(9) : P(4 + m) - 10, "one row k=2");
  }
  if (m == 0) {
    return result(i == 1 ? 3 * (P(k) - 1) : P(2 * k) - 3 * P(k) + 2, "one row m=0");
  }
  if (m == 1 && k >= 3) {
    // The i = 2 entry is 11(2^k - 2): it is what the general expansion and
    // the census give (66 at k = 3).
    if (i == 1) return result(P(k) + 5, "one row m=1 i=1");
    if (i == 2) return result(11 * (P(k) - 2), "one row m=1 i=2");
    return result(P(2 * k + 1) - 3 * P(k + 2) + 16, "one row m=1 i=3");
  }
  if (k >= 3 && k <= 1 + m) {
    if (i == 1) return result(P(k) + 5, "one row k<=1+m i=1");
    if (i <= k - 1) return result(3 * P(k + 2 * i - 4) + 21 * P(3 * i - 5), "one row k<=1+m 2<=i<=k-1");
    return result(P(2 * k + m) - 5 * P(3 * k - 5), "one row k<=1+m i=k");
  }
  if (m >= 2 && m <= k - 2) {
    if (i == 1) return result(P(k) + 5, "one row 2<=m<=k-2 i=1");
    if (i <= m) return result(3 * P(k + 2 * i - 4) + 21 * P(3 * i - 5), "one row 2<=m<=k-2 2<=i<=m");
    if (i == m + 1) return result(11 * (P(k + 2 * m - 2) - P(3 * m - 2)), "one row 2<=m<=k-2 i=m+1");
    return result(P(2 * k + m) - 3 * P(k + 2 * m) + P(3 * m + 1), "one row 2<=m<=k-2 i=m+2");
  }
  not_covered("one-row table", args({{"m", m}, {"k", k}, {"i", i}}), "use gamma_persym_rows");
}

// ---- double persymmetric ----------------------------------------------------

FormulaResult gamma_double(int s, int m, int k, int i) {
  const std::string a = args({{"s", s}, {"m", m}, {"k", k}, {"i", i}});
  if (i < 0) throw DomainError("gamma_double: negative rank at " + a);
  if (s < 1 || m < 0 || k < 1) not_covered("double family", a, "closed forms need s >= 1, m >= 0, k >= 1");
  if (i > std::min(2 * s + m, k)) return {0, "rank above min(2s+m,k)"};
  if (i == 0) return {1, "double i=0"};

  if (m == 0) {
    if (k > i) {
      if (i <= s - 1) return result(21 * P(3 * i - 4) - 3 * P(2 * i - 3), "double m=0 k>i 1<=i<=s-1");
      if (i == s) return result(3 * P(k + s - 1) + 21 * P(3 * s - 4) - 27 * P(2 * s - 3), "double m=0 k>i i=s");
      if (i <= 2 * s - 1) {
        return result(21 * (P(k - 2 * s + 3 * i - 4) + P(3 * i - 4) - 5 * P(4 * i - 2 * s - 5)),
                      "double m=0 k>i s+1<=i<=2s-1");
      }
      return result(P(2 * k + 2 * s - 2) - 3 * P(k + 4 * s - 4) + P(6 * s - 5), "double m=0 k>i i=2s");
    }
    if (i <= s) return result(P(2 * s + 2 * i - 2) - 3 * P(3 * i - 4) + P(2 * i - 3), "double m=0 k=i 1<=i<=s");
    return result(P(2 * s + 2 * i - 2) - 3 * P(3 * i - 4) + P(4 * i - 2 * s - 5), "double m=0 k=i s+1<=i<=2s");
  }

  if (m == 1) {
    if (k > i) {
      if (i <= s - 1) return result(21 * P(3 * i - 4) - 3 * P(2 * i - 3), "double m=1 k>i 1<=i<=s-1");
      if (i == s) return result(P(k + s - 1) + 21 * P(3 * s - 4) - 11 * P(2 * s - 3), "double m=1 k>i i=s");
      if (i == s + 1) {
        return result(11 * P(k + s - 1) + 21 * P(3 * s - 1) - 53 * P(2 * s - 1), "double m=1 k>i i=s+1");
      }
      if (i <= 2 * s) {
        return result(21 * (P(k - 2 * s + 3 * i - 5) + P(3 * i - 4) - 5 * P(4 * i - 2 * s - 6)),
                      "double m=1 k>i s+2<=i<=2s");
      }
      return result(P(2 * k + 2 * s - 1) - 3 * P(k + 4 * s - 2) + P(6 * s - 2), "double m=1 k>i i=2s+1");
    }
    if (i <= s + 1) return result(P(2 * s + 2 * i - 1) - 3 * P(3 * i - 4) + P(2 * i - 3), "double m=1 k=i 1<=i<=s+1");
    // Leading exponent 2s+2i-1 (not 2s+2i-2): matches the census, e.g. 48 at
    // s=1, i=3 and 1344 at s=2, i=4, and continues the i <= s+1 branch.
    return result(P(2 * s + 2 * i - 1) - 3 * P(3 * i - 4) + P(4 * i - 2 * s - 6), "double m=1 k=i s+2<=i<=2s+1");
  }

  if (k > i) {
    if (i <= s - 1) return result(21 * P(3 * i - 4) - 3 * P(2 * i - 3), "double m>=2 k>i 1<=i<=s-1");
    if (i == s) return result(P(k + s - 1) + 21 * P(3 * s - 4) - 11 * P(2 * s - 3), "double m>=2 k>i i=s");
    if (i <= s + m - 1) {
      return result(3 * P(k - s + 2 * i - 3) + 21 * (P(3 * i - 4) - P(3 * i - s - 4)), "double m>=2 k>i s+1<=i<=s+m-1");
    }
    if (i == s + m) {
      return result(11 * P(k + s + 2 * m - 3) + 21 * P(3 * s + 3 * m - 4) - 53 * P(2 * s + 3 * m - 4),
                    "double m>=2 k>i i=s+m");
    }
    if (i <= 2 * s + m - 1) {
      return result(21 * (P(k - 2 * s + 3 * i - m - 4) + P(3 * i - 4) - 5 * P(4 * i - 2 * s - m - 5)),
                    "double m>=2 k>i s+m+1<=i<=2s+m-1");
    }
    return result(P(2 * k + 2 * s + m - 2) - 3 * P(k + 4 * s + 2 * m - 4) + P(6 * s + 3 * m - 5),
                  "double m>=2 k>i i=2s+m");
  }
  const R head = P(2 * s + 2 * i + m - 2) - 3 * P(3 * i - 4);
  if (i <= s + 1) return result(head + P(2 * i - 3), "double m>=2 k=i 1<=i<=s+1");
  if (i <= s + m + 1) return result(head + P(3 * i - s - 4), "double m>=2 k=i s+2<=i<=s+m+1");
  return result(head + P(4 * i - 2 * s - m - 5), "double m>=2 k=i s+m+2<=i<=2s+m");
}

namespace {

// Gamma_j of the square [s-1 over s-1+m] x j family.
R square_gamma(int s, int m, int j) {
  if (j == 0) return 1;
  return R(gamma_double(s - 1, m, j, j).value);
}

}  // namespace

std::vector<FormulaResult> delta_double_candidates(int s, int m, int k, int i) {
  std::vector<FormulaResult> out;
  if (s < 2 || m < 0 || k < 1 || i < 0) return out;
  auto G = [&](int j) { return square_gamma(s, m, j); };
  const int top = 2 * s + m;
  if (i == 0) out.push_back(result(1, "remainder i=0"));
  // The -3 is sigma_0 weighted by -3; without it every census value is off by 3.
  if (i == 1 && k >= 2) out.push_back(result(4 * G(1) - G(2) - 3, "remainder i=1 k>=2"));
  if (i == 1 && k == 1) out.push_back(result(4 * G(1) - 3, "remainder i=1 k=1"));
  if (i == 2 && k >= 3) out.push_back(result(7 * G(2) - 12 * G(1) - G(3) + 2, "remainder i=2 k>=3"));
  if (i == 2 && k == 2) out.push_back(result(7 * G(2) - 12 * G(1) + 2, "remainder i=2 k=2"));
  if (i >= 3 && i <= top - 3 && k >= i + 1) {
    out.push_back(result(7 * G(i) - 14 * G(i - 1) + 8 * G(i - 2) - G(i + 1), "remainder 3<=i<=2s+m-3 k>=i+1"));
  }
  if (i >= 3 && i <= top - 3 && k == i) {
    out.push_back(result(7 * G(i) - 14 * G(i - 1) + 8 * G(i - 2), "remainder 3<=i<=2s+m-3 k=i"));
  }
  if (i == top - 2 && k >= i) {
    out.push_back(result(7 * G(i) - 14 * G(i - 1) + 8 * G(i - 2), "remainder i=2s+m-2"));
  }
  if (i == top - 1 && k >= i) out.push_back(result(-14 * G(top - 2) + 8 * G(top - 3), "remainder i=2s+m-1"));
  if (i == top && k >= i) out.push_back(result(8 * G(top - 2), "remainder i=2s+m"));
  return out;
}

FormulaResult delta_double(int s, int m, int k, int i) {
  auto c = delta_double_candidates(s, m, k, i);
  if (c.empty()) {
    not_covered("double remainder", args({{"s", s}, {"m", m}, {"k", k}, {"i", i}}),
                "use the joint-rank census (delta_double_from_sigma)");
  }
  return c.front();
}

BigInt delta_double_from_sigma(const JointRankTable& t, int i) {
  return t.diagonal(i) - 3 * t.diagonal(i - 1) + 2 * t.diagonal(i - 2);
}

FormulaResult sigma_formula(int s, int m, int k, int i) {
  const std::string a = args({{"s", s}, {"m", m}, {"k", k}, {"i", i}});
  if (s < 2 || m < 0 || k < 1) not_covered("diagonal joint count", a, "needs s >= 2, m >= 0, k >= 1");
  if (i < 0) throw DomainError("sigma_formula: negative rank at " + a);
  if (i == 0) return {1, "sigma i=0"};
  auto G = [&](int j) { return square_gamma(s, m, j); };
  const int cap = 2 * s + m - 2;  // rows of the smallest chain member
  if (k <= cap) {
    if (i <= k - 1) return result(4 * G(i) - G(i + 1), "sigma k<=2s+m-2 1<=i<=k-1");
    if (i == k) return result(4 * G(k), "sigma k<=2s+m-2 i=k");
    return {0, "sigma rank above k"};
  }
  if (i <= cap - 1) return result(4 * G(i) - G(i + 1), "sigma k>=2s+m-2 1<=i<=2s+m-3");
  if (i == cap) return result(4 * G(cap), "sigma k>=2s+m-2 i=2s+m-2");
  return {0, "sigma rank above 2s+m-2"};
}

namespace {

// Double(s', m') with m' possibly -1: [s over s-1] has the ranks of the
// block-swapped [s-1 over s].
std::pair<int, int> canonical_double(int s, int m) {
  if (m < 0) return {s + m, -m};
  return {s, m};
}

}  // namespace

FormulaResult gamma_double_recur(int s, int m, int k, int i) {
  const std::string a = args({{"s", s}, {"m", m}, {"k", k}, {"i", i}});
  if (s < 1 || m < 0 || k < 1) not_covered("double recurrence", a, "needs s >= 1, m >= 0, k >= 1");
  if (i < 0 || i > std::min(2 * s + m, k)) return {0, "rank out of range"};
  if (s == 1) {
    auto base = gamma_double(s, m, k, i);
    base.provenance = "base: " + base.provenance;
    return base;
  }
  auto term = [&](int ts, int tm, int ti) -> BigInt {
    const auto [cs, cm] = canonical_double(ts, tm);
    if (ti < 0) return 0;
    return gamma_double_recur(cs, cm, k, ti).value;
  };
  const BigInt value = 2 * term(s - 1, m + 1, i - 1) + 4 * term(s, m - 1, i - 1) - 8 * term(s - 1, m, i - 2) +
                       delta_double(s, m, k, i).value;
  return {value, "recurrence in s with closed remainder"};
}

FormulaResult gamma_double_recur_census(int s, int m, int k, int i, CensusCache& cache) {
  if (s < 2) throw DomainError("double recurrence needs s >= 2");
  auto term = [&](int ts, int tm, int ti) -> BigInt {
    return cache.distribution(double_shape(ts, tm, k)).at(ti);
  };
  const BigInt value = 2 * term(s - 1, m + 1, i - 1) + 4 * term(s, m - 1, i - 1) - 8 * term(s - 1, m, i - 2) +
                       delta_double_from_sigma(cache.joint(double_shape(s, m, k)), i);
  return {value, "recurrence in s, census terms"};
}

// ---- triple persymmetric ----------------------------------------------------

std::vector<TripleCandidate> gamma_triple_candidates(int s, int m, int k, int i) {
  std::vector<TripleCandidate> out;
  auto add = [&](const char* tag, const R& v, bool preferred = true) { out.push_back({result(v, tag), preferred}); };
  if (s < 1 || m < 0 || k < 1 || i < 0) return out;
  if (i == 0) {
    add("triple i=0", 1);
    return out;
  }
  if (m == 0) {
    if (k >= i + 1) {
      if (i <= s - 1) add("triple m=0 k>i 1<=i<=s-1", 105 * P(4 * i - 6) - 21 * P(3 * i - 5));
      if (i == s) add("triple m=0 k>i i=s", 7 * P(k + s - 1) - 7 * P(2 * s) + 105 * P(4 * s - 6) - 21 * P(3 * s - 5));
      const int j = i - s;
      if (j >= 1 && j <= s - 1) {
        add("triple m=0 k>i i=s+j",
            147 * (5 * P(j - 1) - 1) * P(k + s + 3 * j - 6) +
                21 * (5 * P(4 * s + 4 * j - 6) - P(3 * s + 3 * j - 5) - (155 * P(j - 1) - 35) * P(2 * s + 4 * j - 7)));
      }
      if (i == 2 * s) {
        add("triple m=0 k>i i=2s", 7 * P(2 * k + 2 * s - 2) + 21 * (35 * P(k + 5 * s - 7) - 39 * P(k + 4 * s - 6)) +
                                       7 * (15 * P(8 * s - 6) - 465 * P(7 * s - 8) + 349 * P(6 * s - 7)));
      }
      const int h = i - 2 * s - 1;
      if (h >= 0 && h <= s - 2) {
        add("triple m=0 k>i i=2s+1+j",
            105 * (P(2 * k + 2 * s + 4 * h - 2) + 7 * P(k + 5 * s + 4 * h - 3) - 31 * P(k + 4 * s + 5 * h - 3)) +
                105 * (P(8 * s + 4 * h - 2) - 31 * P(7 * s + 5 * h - 3) + 93 * P(6 * s + 6 * h - 3)));
      }
    }
    if (i == 3 * s && k >= 3 * s) {
      add("triple m=0 i=3s", P(3 * k + 3 * s - 3) - 7 * P(2 * k + 6 * s - 6) + 7 * P(k + 9 * s - 8) - P(12 * s - 9));
    }
    if (k == i) {
      if (i <= s + 1) add("triple m=0 k=i 1<=i<=s+1", P(3 * s + 3 * i - 3) - 7 * P(4 * i - 6) + 3 * P(3 * i - 5));
      const int j = i - s;
      if (j >= 1 && j <= s + 1) {
        add("triple m=0 k=i i=s+j", P(6 * s + 3 * j - 3) + 7 * P(2 * s + 5 * j - 8) - 7 * P(2 * s + 4 * j - 7) -
                                        7 * P(4 * s + 4 * j - 6) + 3 * P(3 * s + 3 * j - 5));
      }
      const int h = i - 2 * s - 1;
      if (h >= 0 && h <= s - 1) {
        add("triple m=0 k=i i=2s+1+j",
            P(9 * s + 3 * h) - 7 * P(8 * s + 4 * h - 2) + 7 * P(7 * s + 5 * h - 3) - P(6 * s + 6 * h - 3));
      }
    }
    return out;
  }

  if (m == 1) {
    if (k >= i + 1) {
      const int j = i - s;
      const bool low_band = j <= s;
      if (i <= s - 1) add("triple m=1 k>i 1<=i<=s-1", 105 * P(4 * i - 6) - 21 * P(3 * i - 5));
      if (i == s) add("triple m=1 k>i i=s", P(k + s - 1) - P(2 * s) + 105 * P(4 * s - 6) - 21 * P(3 * s - 5));
      if (i == s + 1) {
        add("triple m=1 k>i i=s+1", 33 * P(k + s - 1) + 105 * P(4 * s - 2) - 21 * P(3 * s - 2) - 69 * P(2 * s));
      }
      if (i == s + 2) {
        add("triple m=1 k>i i=s+2", 630 * P(k + s - 1) + 21 * (5 * P(4 * s + 2) - P(3 * s + 1) - 65 * P(2 * s + 1)),
            low_band);
      }
      if (i == s + 3) {
        add("triple m=1 k>i i=s+3", 1365 * P(k + s + 2) + 21 * (5 * P(4 * s + 6) - P(3 * s + 4) - 285 * P(2 * s + 4)),
            low_band);
      }
      if (i == s + 4) {
        add("triple m=1 k>i i=s+4", 2835 * P(k + s + 5) + 21 * (5 * P(4 * s + 10) - P(3 * s + 7) - 595 * P(2 * s + 8)),
            low_band);
      }
      if (j >= 2 && j <= s) {
        add("triple m=1 k>i i=s+j",
            105 * (7 * P(j - 2) - 1) * P(k + s + 3 * j - 7) +
                21 * (5 * P(4 * s + 4 * j - 6) - P(3 * s + 3 * j - 5) - 155 * P(2 * s + 5 * j - 10) +
                      25 * P(2 * s + 4 * j - 8)));
      }
      if (i == 2 * s + 1) {
        add("triple m=1 k>i i=2s+1", 3 * P(2 * s - 1) * (P(2 * k) - P(4 * s + 4)) +
                                         (735 * P(5 * s - 5) - 393 * P(4 * s - 4)) * (P(k) - P(2 * s + 2)) +
                                         21 * (5 * P(8 * s - 2) + P(6 * s - 4) - 15 * P(7 * s - 5)));
      }
      if (i == 2 * s + 2) {
        add("triple m=1 k>i i=2s+2", 53 * P(2 * s - 1) * (P(2 * k) - P(4 * s + 6)) +
                                         (735 * P(5 * s - 1) - 1629 * P(4 * s - 1)) * (P(k) - P(2 * s + 3)) +
                                         21 * (5 * P(8 * s + 2) + 3 * P(6 * s) - 15 * P(7 * s)));
      }
      const int h = i - 2 * s - 3;
      if (h >= 0 && h <= s - 2) {
        add("triple m=1 k>i i=2s+3+j",
            105 * (P(2 * k + 2 * s + 4 * h + 2) + 7 * P(k + 5 * s + 4 * h + 3) - 31 * P(k + 4 * s + 5 * h + 3)) +
                105 * (P(8 * s + 4 * h + 6) - 31 * P(7 * s + 5 * h + 5) + 93 * P(6 * s + 6 * h + 5)));
      }
    }
    if (i == 3 * s + 2 && k >= 3 * s + 2) {
      add("triple m=1 i=3s+2", P(3 * k + 3 * s - 1) - 7 * P(2 * k + 6 * s - 2) + 7 * P(k + 9 * s - 2) - P(12 * s - 1));
    }
    if (k == i) {
      if (i <= s + 1) add("triple m=1 k=i 1<=i<=s+1", P(3 * s + 3 * i - 1) - 7 * P(4 * i - 6) + 3 * P(3 * i - 5));
      const int j = i - s;
      if (j >= 2 && j <= s + 3) {
        add("triple m=1 k=i i=s+j", P(6 * s + 3 * j - 1) - 7 * P(4 * s + 4 * j - 6) + 3 * P(3 * s + 3 * j - 5) +
                                        7 * P(2 * s + 5 * j - 10) - 5 * P(2 * s + 4 * j - 8));
      }
      if (i == 2 * s + 1) add("triple m=1 k=i i=2s+1", P(9 * s + 2) + 7 * P(7 * s - 5) - 7 * P(8 * s - 2) + 7 * P(6 * s - 4));
      if (i == 2 * s + 2) add("triple m=1 k=i i=2s+2", P(9 * s + 5) + 7 * P(7 * s) - 7 * P(8 * s + 2) + P(6 * s));
      if (i == 2 * s + 3) add("triple m=1 k=i i=2s+3", P(9 * s + 8) + 7 * P(7 * s + 5) - 7 * P(8 * s + 6) - P(6 * s + 5));
      const int h = i - 2 * s - 3;
      if (h >= 0 && h <= s - 1) {
        add("triple m=1 k=i i=2s+3+j",
            P(9 * s + 3 * h + 8) - 7 * P(8 * s + 4 * h + 6) + 7 * P(7 * s + 5 * h + 5) - P(6 * s + 6 * h + 5));
      }
    }
    return out;
  }

  // m >= 2
  if (k >= i + 1) {
    if (i <= s - 1) add("triple m>=2 k>i 1<=i<=s-1", 105 * P(4 * i - 6) - 21 * P(3 * i - 5));
    if (i == s) add("triple m>=2 k>i i=s", P(k + s - 1) - P(2 * s) + 21 * (5 * P(4 * s - 6) - P(3 * s - 5)));
    const int j = i - s;
    if (j >= 1 && j <= m - 1) {
      add("triple m>=2 k>i i=s+j (j<m)",
          (21 * P(j - 1) - 3) * P(k + s + 2 * j - 4) +
              21 * (5 * P(4 * s + 4 * j - 6) - P(3 * s + 3 * j - 5) - 5 * P(2 * s + 4 * j - 6) + P(2 * s + 3 * j - 5)));
    }
    if (i == s + m) {
      add("triple m>=2 k>i i=s+m", (21 * P(s + 3 * m - 5) + 45 * P(s + 2 * m - 4)) * (P(k) - P(s + m + 1)) +
                                       105 * P(4 * s + 4 * m - 6) - 21 * P(3 * s + 3 * m - 5) -
                                       21 * P(2 * s + 4 * m - 6) + 9 * P(2 * s + 3 * m - 5));
    }
    const int jj = i - s - m;
    if (jj >= 1 && jj <= s - 1) {
      add("triple m>=2 k>i i=s+m+j",
          21 * (P(k + s + 3 * m + 3 * jj - 5) + 35 * P(k + s + 2 * m + 4 * jj - 7) - 9 * P(k + s + 2 * m + 3 * jj - 6) +
                5 * P(4 * s + 4 * m + 4 * jj - 6) - P(3 * s + 3 * m + 3 * jj - 5) - 5 * P(2 * s + 4 * m + 4 * jj - 6) -
                155 * P(2 * s + 3 * m + 5 * jj - 8) + 45 * P(2 * s + 3 * m + 4 * jj - 7)));
    }
    if (i == 2 * s + m) {
      add("triple m>=2 k>i i=2s+m",
          3 * P(2 * k + 2 * s + m - 2) + 21 * P(k + 4 * s + 3 * m - 5) + 735 * P(k + 5 * s + 2 * m - 7) -
              477 * P(k + 4 * s + 2 * m - 6) + 105 * P(8 * s + 4 * m - 6) - 105 * P(6 * s + 4 * m - 6) -
              3255 * P(7 * s + 3 * m - 8) + 1629 * P(6 * s + 3 * m - 7));
    }
    const int h = i - 2 * s - m - 1;
    if (h >= 0 && h <= m - 2) {
      add("triple m>=2 k>i i=2s+m+1+j",
          21 * P(2 * k + 2 * s + m + 3 * h - 2) + 21 * P(k + 4 * s + 3 * m + 3 * h - 2) +
              735 * P(k + 5 * s + 2 * m + 4 * h - 3) - 945 * P(k + 4 * s + 2 * m + 4 * h - 3) +
              105 * P(8 * s + 4 * m + 4 * h - 2) - 105 * P(6 * s + 4 * m + 4 * h - 2) -
              3255 * P(7 * s + 3 * m + 5 * h - 3) + 3255 * P(6 * s + 3 * m + 5 * h - 3));
    }
    if (i == 2 * s + 2 * m) {
      add("triple m>=2 k>i i=2s+2m",
          53 * P(2 * s - 1) * (P(2 * k + 4 * m - 4) - P(4 * s + 8 * m - 2)) +
              (735 * P(5 * s - 1) - 1629 * P(4 * s - 1)) * (P(k + 6 * m - 6) - P(2 * s + 8 * m - 5)) +
              21 * (5 * P(8 * s + 8 * m - 6) + 3 * P(6 * s + 8 * m - 8) - 15 * P(7 * s + 8 * m - 8)));
    }
    const int g = i - 2 * s - 2 * m - 1;
    if (g >= 0 && g <= s - 2) {
      add("triple m>=2 k>i i=2s+2m+1+j",
          105 * (P(2 * k + 2 * s + 4 * m + 4 * g - 2) + 7 * P(k + 5 * s + 6 * m + 4 * g - 3) -
                 31 * P(k + 4 * s + 6 * m + 5 * g - 3)) +
              105 * (P(8 * s + 8 * m + 4 * g - 2) - 31 * P(7 * s + 8 * m + 5 * g - 3) + 93 * P(6 * s + 8 * m + 6 * g - 3)));
    }
  }
  if (i == 3 * s + 2 * m && k >= i) {
    add("triple m>=2 i=3s+2m", P(3 * k + 2 * m + 3 * s - 3) - 7 * P(2 * k + 4 * m + 6 * s - 6) +
                                   7 * P(k + 6 * m + 9 * s - 8) - P(8 * m + 12 * s - 9));
  }
  if (k == i) {
    if (i <= s + 1) add("triple m>=2 k=i 1<=i<=s+1", P(3 * s + 2 * m + 3 * i - 3) - 7 * P(4 * i - 6) + 3 * P(3 * i - 5));
    const int j = i - s;
    if (j >= 1 && j <= m + 1) {
      add("triple m>=2 k=i i=s+j", P(6 * s + 2 * m + 3 * j - 3) - 7 * P(4 * s + 4 * j - 6) + 3 * P(3 * s + 3 * j - 5) +
                                       (P(j - 1) - 1) * P(2 * s + 3 * j - 5));
    }
    const int jj = i - s - m;
    if (jj >= 1 && jj <= s - 1) {
      add("triple m>=2 k=i i=s+m+j", P(6 * s + 5 * m + 3 * jj - 3) - 7 * P(4 * s + 4 * m + 4 * jj - 6) +
                                         3 * P(3 * s + 3 * m + 3 * jj - 5) + P(2 * s + 4 * m + 4 * jj - 6) +
                                         7 * P(2 * s + 3 * m + 5 * jj - 8) - 9 * P(2 * s + 3 * m + 4 * jj - 7));
    }
    if (i == 2 * s + m) {
      add("triple m>=2 k=i i=2s+m", P(9 * s + 5 * m - 3) - 7 * P(8 * s + 4 * m - 6) + 7 * P(7 * s + 3 * m - 8) +
                                        3 * P(6 * s + 3 * m - 7) + P(6 * s + 4 * m - 6));
    }
    const int h = i - 2 * s - m - 1;
    if (h >= 0 && h <= m - 2) {
      add("triple m>=2 k=i i=2s+m+1+j", P(9 * s + 5 * m + 2 * h) - 7 * P(8 * s + 4 * m + 4 * h - 2) +
                                            7 * P(7 * s + 3 * m + 5 * h - 3) - 3 * P(6 * s + 3 * m + 5 * h - 3) +
                                            P(6 * s + 4 * m + 4 * h - 2));
    }
    if (i == 2 * s + 2 * m) {
      // Last term enters with +, as in the m = 1 analogue; census: 2605056 at
      // s=1,m=2 and 1708130304 at s=2,m=2.
      add("triple m>=2 k=i i=2s+2m",
          P(9 * s + 8 * m - 3) - 7 * P(8 * s + 8 * m - 6) + 7 * P(7 * s + 8 * m - 8) + P(6 * s + 8 * m - 8));
    }
    const int g = i - 2 * s - 2 * m - 1;
    if (g >= 0 && g <= s - 2) {
      add("triple m>=2 k=i i=2s+2m+1+j", P(9 * s + 8 * m + 3 * g) - 7 * P(8 * s + 8 * m + 4 * g - 2) +
                                             7 * P(7 * s + 8 * m + 5 * g - 3) - P(6 * s + 8 * m + 6 * g - 3));
    }
    if (i == 3 * s + 2 * m) add("triple m>=2 k=i i=3s+2m", 21 * P(8 * m + 12 * s - 9));
  }
  return out;
}

FormulaResult gamma_triple(int s, int m, int k, int i) {
  const std::string a = args({{"s", s}, {"m", m}, {"k", k}, {"i", i}});
  if (i < 0) throw DomainError("gamma_triple: negative rank at " + a);
  if (s < 1 || m < 0 || k < 1) not_covered("triple family", a, "closed forms need s >= 1, m >= 0, l = 0, k >= 1");
  if (i > std::min(3 * s + 2 * m, k)) return {0, "rank above min(3s+2m,k)"};
  for (const auto& c : gamma_triple_candidates(s, m, k, i)) {
    if (c.preferred) return c.result;
  }
  not_covered("triple family", a, "use the census or the triple recurrence");
}

BigInt delta_triple_from_sigma(const JointRankTable& t, int i) {
  return t.diagonal(i) - 7 * t.diagonal(i - 1) + 14 * t.diagonal(i - 2) - 8 * t.diagonal(i - 3);
}

FormulaResult gamma_triple_recur(int s, int m, int l, int k, int i, CensusCache& cache) {
  if (s < 2) throw DomainError("triple recurrence needs s >= 2");
  auto G = [&](int ts, int tm, int tl, int ti) -> BigInt {
    return cache.distribution(triple_shape(ts, tm, tl, k)).at(ti);
  };
  const BigInt value = 2 * G(s - 1, m + 1, l, i - 1) + 4 * G(s, m - 1, l + 1, i - 1) + 8 * G(s, m, l - 1, i - 1) -
                       8 * G(s - 1, m, l + 1, i - 2) - 16 * G(s - 1, m + 1, l - 1, i - 2) -
                       32 * G(s, m - 1, l, i - 2) + 64 * G(s - 1, m, l, i - 3) +
                       delta_triple_from_sigma(cache.joint(triple_shape(s, m, l, k)), i);
  return {value, "triple recurrence in s, census terms"};
}

// ---- moments --------------------------------------------------------------

FormulaResult moment(const std::vector<BigInt>& counts, int q, int row_dim_exp, int measure_bits) {
  if (q < 1) throw DomainError("moment needs q >= 1");
  R sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    sum += R(counts[i]) * P(q * (row_dim_exp - static_cast<int>(i)));
  }
  sum *= P(-measure_bits);
  return result(sum, "moment of rank counts");
}

FormulaResult moment(const RankDistribution& dist, int q, int row_dim_exp, int measure_bits) {
  return moment(dist.counts, q, row_dim_exp, measure_bits);
}

FormulaResult moment(const RankDistribution& dist, int q) {
  return moment(dist.counts, q, dist.shape.k + dist.shape.total_rows(), dist.shape.param_bits());
}

FormulaResult r_q_single_closed(int q, int k, int m) {
  if (q < 1 || m < 0 || m > k - 1) {
    throw DomainError("r_q_single_closed needs q >= 1 and 0 <= m <= k-1, got " + args({{"q", q}, {"k", k}, {"m", m}}));
  }
  if (q == 1) return result(P(k) + P(1 + m) - 1, "single moment q=1");
  if (q == 2) return result(P(2 * k) + 3 * (m + 1) * P(k + m), "single moment q=2");
  const R bracket = 1 + 3 * (1 - P((2 - q) * m)) / (P(q) - 4) + (P(k + m) - P(2 * m)) * P(-q * (1 + m));
  return result(P((q - 1) * (k + m + 1) + 1) * bracket, "single moment q>=3");
}

// ---- reduction identities -------------------------------------------------

const char* reduction_name(Reduction r) {
  switch (r) {
    case Reduction::DeltaStability: return "delta-stability";
    case Reduction::ColumnGrowth: return "column-growth";
    case Reduction::DoubleMiddleRanks: return "double-middle-ranks";
    case Reduction::DoubleTopRanks: return "double-top-ranks";
    case Reduction::TripleEqualBlocks: return "triple-equal-blocks";
    case Reduction::TripleOneExtra: return "triple-one-extra";
    case Reduction::TripleManyExtra: return "triple-many-extra";
  }
  return "?";
}

std::vector<Reduction> all_reductions() {
  return {Reduction::DeltaStability,    Reduction::ColumnGrowth,   Reduction::DoubleMiddleRanks,
          Reduction::DoubleTopRanks,    Reduction::TripleEqualBlocks, Reduction::TripleOneExtra,
          Reduction::TripleManyExtra};
}

Reduction parse_reduction(const std::string& name) {
  for (auto r : all_reductions())
    if (name == reduction_name(r)) return r;
  throw DomainError("unknown identity family \"" + name + "\"");
}

FormulaResult GammaOracle::gamma(const FamilyShape& f, int i) {
  if (i < 0 || i > f.max_rank()) return {0, "rank out of range"};
  if (f.param_bits() <= census_bits_) return {cache_.distribution(f).at(i), "census"};
  FormulaResult r;
  switch (f.kind) {
    case FamilyKind::Single: r = gamma_persym(f.s, f.k, i); break;
    case FamilyKind::PersymPlusRows: r = gamma_persym_rows(f.n, f.m, f.k, i); break;
    case FamilyKind::Double: {
      const auto [s, m] = canonical_double(f.s, f.m);
      r = gamma_double(s, m, f.k, i);
      break;
    }
    case FamilyKind::Triple:
      if (f.l != 0) not_covered("triple family", to_string(f), "closed forms need l = 0");
      r = gamma_triple(f.s, f.m, f.k, i);
      break;
  }
  r.provenance = "closed form (" + r.provenance + ")";
  return r;
}

FormulaResult GammaOracle::delta_double(int s, int m, int k, int i) {
  const FamilyShape f = double_shape(s, m, k);
  if (f.param_bits() + 2 <= census_bits_) {
    return {delta_double_from_sigma(cache_.joint(f), i), "census sigma"};
  }
  auto r = persym::delta_double(s, m, k, i);
  r.provenance = "closed form (" + r.provenance + ")";
  return r;
}

namespace {

struct Collector {
  std::vector<IdentityCheck>& out;
  std::string identity;

  void add(const std::string& inst, const FormulaResult& lhs, const FormulaResult& rhs) {
    out.push_back({identity, inst, lhs.value, rhs.value, lhs.provenance, rhs.provenance});
  }
};

FormulaResult scaled(const FormulaResult& r, int log2_factor) {
  return {r.value * pow2(log2_factor), "2^" + std::to_string(log2_factor) + " * " + r.provenance};
}

FormulaResult literal(const R& v) { return result(v, "stated value"); }

void delta_stability(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector c{out, "remainder stable in k"};
  for (int s = 2; s <= b.max_s; ++s)
    for (int m = 0; m <= b.max_m; ++m)
      for (int k = 1; k <= b.max_k; ++k) {
        const int top = 2 * s + m;
        for (int i = 0; i <= std::min(top, k); ++i) {
          int ref = -1;
          if (i <= top - 3 && k > i + 1) ref = i + 1;
          if (i >= top - 2 && k > i) ref = i;
          if (ref < 0) continue;
          c.add(args({{"s", s}, {"m", m}, {"k", k}, {"i", i}}), o.delta_double(s, m, k, i), o.delta_double(s, m, ref, i));
        }
      }
}

void column_growth(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector c{out, "column growth"};
  for (int s = 1; s <= b.max_s; ++s)
    for (int m = 0; m <= b.max_m; ++m)
      for (int k = 1; k + 1 <= b.max_k; ++k) {
        auto diff = [&](int i) {
          const auto hi = o.gamma(double_shape(s, m, k + 1), i);
          const auto lo = o.gamma(double_shape(s, m, k), i);
          return FormulaResult{hi.value - lo.value, hi.provenance + " minus " + lo.provenance};
        };
        auto inst = [&](int i) { return args({{"s", s}, {"m", m}, {"k", k}, {"i", i}}); };
        for (int j = 0; j <= s - 1; ++j)
          if (k > j) c.add(inst(j), diff(j), literal(0));
        if (m <= 1) {
          for (int j = 0; j <= s + m; ++j) {
            const int i = s + j;
            R v;
            bool ok = false;
            if (m == 0) {
              if (j == 0 && k > s) v = 3 * P(k + s - 1), ok = true;
              if (j >= 1 && j <= s - 1 && k > s + j) v = 21 * P(k + s + 3 * j - 4), ok = true;
              if (j == s && k > 2 * s) v = 3 * P(2 * k + 2 * s - 2) - 3 * P(k + 4 * s - 4), ok = true;
            } else {
              if (j == 0 && k > s) v = P(k + s - 1), ok = true;
              if (j == 1 && k > s + 1) v = 11 * P(k + s - 1), ok = true;
              if (j >= 2 && j <= s && k > s + j) v = 21 * P(k + s + 3 * j - 5), ok = true;
              if (j == s + 1 && k > 2 * s + 1) v = 3 * P(2 * k + 2 * s - 1) - 3 * P(k + 4 * s - 2), ok = true;
            }
            if (ok) c.add(inst(i), diff(i), literal(v));
          }
        } else {
          for (int j = 0; j <= m; ++j) {
            R v;
            bool ok = false;
            if (j == 0 && k > s) v = P(k + s - 1), ok = true;
            if (j >= 1 && j <= m - 1 && k > s + j) v = 3 * P(k + s + 2 * j - 3), ok = true;
            if (j == m && k > s + m) v = 11 * P(k + s + 2 * m - 3), ok = true;
            if (ok) c.add(inst(s + j), diff(s + j), literal(v));
          }
          for (int j = 1; j <= s; ++j) {
            R v;
            bool ok = false;
            if (j <= s - 1 && k > s + m + j) v = 21 * P(k + s + 2 * m + 3 * j - 4), ok = true;
            if (j == s && k > 2 * s + m) v = 3 * P(2 * k + 2 * s + m - 2) - 3 * P(k + 4 * s + 2 * m - 4), ok = true;
            if (ok) c.add(inst(s + m + j), diff(s + m + j), literal(v));
          }
        }
      }
}

void double_middle(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector shift{out, "middle rank shift"};
  Collector value{out, "middle rank value"};
  for (int s = 1; s <= b.max_s; ++s)
    for (int m = 1; m <= b.max_m; ++m) {
      for (int j = 1; j <= m; ++j) {
        // Square case of the reduced shape.
        const int mm = m - (j - 1);
        value.add(args({{"s", s}, {"m", m}, {"j", j}, {"k", s + j}}), o.gamma(double_shape(s, mm, s + 1), s + 1),
                  literal(P(4 * s + mm) - 3 * P(3 * s - 1) + P(2 * s - 1)));
      }
      for (int k = 1; k <= b.max_k; ++k)
        for (int j = 1; j <= m; ++j) {
          const std::string inst = args({{"s", s}, {"m", m}, {"j", j}, {"k", k}});
          const int mm = m - (j - 1);
          const int kk = k - (j - 1);
          if (k >= s + j) {
            shift.add(inst, o.gamma(double_shape(s, m, k), s + j), scaled(o.gamma(double_shape(s, mm, kk), s + 1), 3 * (j - 1)));
          }
          if (j <= m - 1 && k > s + j) {
            value.add(inst, o.gamma(double_shape(s, mm, kk), s + 1),
                      literal(3 * P(k - j + s) + 21 * (P(3 * s - 1) - P(2 * s - 1))));
          }
          if (j == m && k > s + m) {
            // Constant -53 * 2^(2s-1); the k > i, i = s+1 double case gives the same.
            value.add(inst, o.gamma(double_shape(s, 1, kk), s + 1),
                      literal(11 * P(k - m + s) + 21 * P(3 * s - 1) - 53 * P(2 * s - 1)));
          }
        }
    }
}

void double_top(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector shift{out, "top rank shift"};
  Collector value{out, "top rank value"};
  for (int s = 1; s <= b.max_s; ++s)
    for (int m = 0; m <= b.max_m; ++m) {
      for (int j = 0; j <= s - 1; ++j) {
        value.add(args({{"s", s}, {"m", m}, {"j", j}, {"k", s + m + 1 + j}}),
                  o.gamma(double_shape(s - j, 0, s - j + 1), s - j + 1),
                  literal(P(4 * s - 4 * j) - 3 * P(3 * s - 3 * j - 1) + P(2 * s - 2 * j - 1)));
      }
      for (int k = 1; k <= b.max_k; ++k)
        for (int j = 0; j <= s - 1; ++j) {
          const std::string inst = args({{"s", s}, {"m", m}, {"j", j}, {"k", k}});
          const int kk = k - m - 2 * j;
          if (k >= s + m + 1 + j) {
            shift.add(inst, o.gamma(double_shape(s, m, k), s + m + 1 + j),
                      scaled(o.gamma(double_shape(s - j, 0, kk), s - j + 1), 3 * (2 * j + m)));
          }
          if (j <= s - 2 && k > s + m + 1 + j) {
            value.add(inst, o.gamma(double_shape(s - j, 0, kk), s - j + 1),
                      literal(21 * (P(k - m - 3 * j + s - 1) + P(3 * s - 3 * j - 1) - 5 * P(2 * s - 2 * j - 1))));
          }
          if (j == s - 1 && k > 2 * s + m) {
            const int kt = k - m - 2 * s + 2;
            value.add(inst, o.gamma(double_shape(1, 0, kt), 2), literal(P(2 * (k - m) - 4 * s + 4) - 3 * P(kt) + 2));
          }
        }
    }
}

FamilyShape tri(int s, int m, int k) { return triple_shape(s, m, 0, k); }

void triple_equal(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector c{out, "equal-block shift"};
  for (int s = 1; s <= b.max_s; ++s) {
    for (int j = 0; j <= s - 1; ++j) {
      const int k = 2 * s + 1 + j;
      const int r = 2 * (s - j) + 1;
      if (j >= 1) {
        c.add(args({{"s", s}, {"j", j}, {"k", k}}), o.gamma(tri(s, 0, k), k), scaled(o.gamma(tri(s - j, 0, r), r), 12 * j));
      }
    }
    for (int k = 1; k <= b.max_k; ++k) {
      for (int j = 1; j <= s - 2; ++j) {
        if (k >= 2 * s + 2 + j) {
          c.add(args({{"s", s}, {"j", j}, {"k", k}}), o.gamma(tri(s, 0, k), 2 * s + 1 + j),
                scaled(o.gamma(tri(s - j, 0, k - 3 * j), 2 * (s - j) + 1), 12 * j));
        }
      }
      if (s >= 2 && k >= 3 * s) {
        c.add(args({{"s", s}, {"k", k}, {"i", 3 * s}}), o.gamma(tri(s, 0, k), 3 * s),
              scaled(o.gamma(tri(1, 0, k - 3 * (s - 1)), 3), 12 * (s - 1)));
      }
    }
  }
}

void triple_one(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector c{out, "one-extra shift"};
  for (int s = 1; s <= b.max_s; ++s)
    for (int k = 1; k <= b.max_k; ++k) {
      if (k >= 2 * s + 3 && k - 2 >= 1) {
        c.add(args({{"s", s}, {"j", 1}, {"k", k}}), o.gamma(tri(s, 1, k), 2 * s + 3),
              scaled(o.gamma(tri(s, 0, k - 2), 2 * s + 1), 8));
      }
      for (int j = 0; j <= s - 1; ++j) {
        const int kk = k - 2 - 3 * j;
        if (k >= 2 * s + 3 + j && kk >= 1) {
          c.add(args({{"s", s}, {"j", j}, {"k", k}, {"i", 2 * s + 3 + j}}), o.gamma(tri(s, 1, k), 2 * s + 3 + j),
                scaled(o.gamma(tri(s - j, 0, kk), 2 * (s - j) + 1), 4 * (2 + 3 * j)));
        }
      }
    }
}

void triple_many(const ReductionBounds& b, GammaOracle& o, std::vector<IdentityCheck>& out) {
  Collector c{out, "many-extra shift"};
  for (int s = 1; s <= b.max_s; ++s)
    for (int m = 2; m <= b.max_m; ++m)
      for (int k = 1; k <= b.max_k; ++k) {
        for (int j = 1; j <= m - 2; ++j) {
          if (k >= 2 * s + m + 2 + j) {
            c.add(args({{"s", s}, {"m", m}, {"j", j}, {"k", k}}), o.gamma(tri(s, m, k), 2 * s + m + 1 + j),
                  scaled(o.gamma(tri(s, m - j, k - 2 * j), 2 * s + 1 + (m - j)), 8 * j));
          }
        }
        if (k >= 2 * s + 2 * m + 1) {
          c.add(args({{"s", s}, {"m", m}, {"k", k}, {"i", 2 * s + 2 * m}}), o.gamma(tri(s, m, k), 2 * s + 2 * m),
                scaled(o.gamma(tri(s, 1, k - 2 * (m - 1)), 2 * s + 2), 4 * (2 * m - 2)));
        }
        for (int j = 0; j <= s - 2; ++j) {
          if (k >= 2 * s + 2 * m + 2 + j) {
            c.add(args({{"s", s}, {"m", m}, {"j", j}, {"k", k}, {"i", 2 * s + 2 * m + 1 + j}}),
                  o.gamma(tri(s, m, k), 2 * s + 2 * m + 1 + j),
                  scaled(o.gamma(tri(s - j, 0, k - 2 * m - 3 * j), 2 * (s - j) + 1), 4 * (2 * m + 3 * j)));
          }
        }
        if (k >= 3 * s + 2 * m) {
          c.add(args({{"s", s}, {"m", m}, {"k", k}, {"i", 3 * s + 2 * m}}), o.gamma(tri(s, m, k), 3 * s + 2 * m),
                scaled(o.gamma(tri(1, 0, k - 2 * m - 3 * s + 3), 3), 4 * (2 * m + 3 * s - 3)));
        }
      }
}

}  // namespace

std::vector<IdentityCheck> reduction_identities(Reduction kind, const ReductionBounds& b, GammaOracle& o) {
  std::vector<IdentityCheck> out;
  switch (kind) {
    case Reduction::DeltaStability: delta_stability(b, o, out); break;
    case Reduction::ColumnGrowth: column_growth(b, o, out); break;
    case Reduction::DoubleMiddleRanks: double_middle(b, o, out); break;
    case Reduction::DoubleTopRanks: double_top(b, o, out); break;
    case Reduction::TripleEqualBlocks: triple_equal(b, o, out); break;
    case Reduction::TripleOneExtra: triple_one(b, o, out); break;
    case Reduction::TripleManyExtra: triple_many(b, o, out); break;
  }
  return out;
}

}  // namespace persym

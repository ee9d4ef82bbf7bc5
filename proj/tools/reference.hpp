#pragma once

// Reference rank tables and moment values quoted in the literature on
// persymmetric families. Each lookup returns nothing when the quoted guard
// on k does not hold.

#include <optional>
#include <vector>

#include "persym/bigint.hpp"

namespace persym::ref {

inline BigInt P(int e) { return pow2(e); }

/// (1+m) x k block over n free rows: (n,m,k) = (1,2,3) and (5,2,4).
inline const std::vector<BigInt> kRows_1_2_3 = {1, 13, 66, 176};
inline const std::vector<BigInt> kRows_5_2_4 = {1, 561, 65670, 3731208, 63311424};

inline const std::vector<BigInt> kDouble_3_2_4 = {1, 9, 78, 648, 15648};
inline const std::vector<BigInt> kDouble_5_0_6 = {1, 9, 78, 648, 5280, 42624, 999936};

/// Free-row expansion coefficients for n = 1..5, j = 0..n.
inline const std::vector<std::vector<long long>> kACoeff = {
    {1, 1}, {1, 3, 1}, {1, 7, 7, 1}, {1, 15, 35, 15, 1}, {1, 31, 155, 155, 31, 1}};

/// [1 over 1 over 1] x k.
inline std::optional<BigInt> triple_s1(int k, int i) {
  const BigInt K = P(k);
  switch (i) {
    case 0: if (k >= 1) return BigInt(1); break;
    case 1: if (k >= 2) return 7 * (K - 1); break;
    case 2: if (k >= 3) return 7 * (K - 1) * (K - 2); break;
    case 3: if (k >= 3) return P(3 * k) - 7 * P(2 * k) + 7 * P(k + 1) - 8; break;
  }
  return std::nullopt;
}

/// [2 over 2 over 2] x k.
inline std::optional<BigInt> triple_s2(int k, int i) {
  if (i <= 5 && k < i + 1) return std::nullopt;
  switch (i) {
    case 0: return BigInt(1);
    case 1: return BigInt(21);
    case 2: return 7 * P(k + 1) + 266;
    case 3: return 147 * P(k + 1) + 1344;
    case 4: return 7 * P(2 * k + 2) + 651 * P(k + 2) - 22624;
    case 5: return 105 * P(2 * k + 2) - 315 * P(k + 5) + 53760;
    case 6: if (k >= 6) return P(3 * k + 3) - 7 * P(2 * k + 6) + 7 * P(k + 10) - 32768; break;
  }
  return std::nullopt;
}

inline const std::vector<BigInt> kTriple_2_0_6 = {1, 21, 1162, 20160, 258720, 1128960, 688128};

/// [3 over 3 over 3] x k.
inline std::optional<BigInt> triple_s3_m0(int k, int i) {
  if (i <= 8 && k < i + 1) return std::nullopt;
  switch (i) {
    case 0: return BigInt(1);
    case 1: return BigInt(21);
    case 2: return BigInt(378);
    case 3: return 7 * P(k + 2) + 5936;
    case 4: return 147 * P(k + 2) + 84672;
    case 5: return 147 * 9 * P(k + 3) + 959616;
    case 6: return 7 * P(2 * k + 4) + 2121 * P(k + 6) + 5863424;
    case 7: return 105 * P(2 * k + 4) + 2625 * P(k + 9) - 92897280;
    case 8: return 105 * P(2 * k + 8) - 315 * P(k + 14) + 220200960;
    case 9: if (k >= 9) return P(3 * k + 6) - 7 * P(2 * k + 12) + 7 * P(k + 19) - 134217728; break;
  }
  return std::nullopt;
}

/// [3 over 4 over 4] x k.
inline std::optional<BigInt> triple_s3_m1(int k, int i) {
  static const int min_k[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 11};
  if (i < 0 || i > 11 || k < min_k[i]) return std::nullopt;
  switch (i) {
    case 0: return BigInt(1);
    case 1: return BigInt(21);
    case 2: return BigInt(378);
    case 3: return P(k + 2) + 6320;
    case 4: return 33 * P(k + 2) + 100416;
    case 5: return 630 * P(k + 2) + 1524096;
    case 6: return 1365 * P(k + 5) + 21224448;
    case 7: return 96 * P(2 * k) + 163008 * P(k + 2) + 1029 * P(18);
    case 8: return 1696 * P(2 * k) + 2176512 * P(k + 2) + 5723 * P(18);
    case 9: return 105 * P(2 * k + 8) + 2625 * P(k + 15) - 90720 * P(18);
    case 10: return 105 * P(2 * k + 12) - 315 * P(k + 20) + 215040 * P(18);
    case 11: return P(3 * k + 8) - 7 * P(2 * k + 16) + 7 * P(k + 25) - P(35);
  }
  return std::nullopt;
}

inline const std::vector<BigInt> kTriple_3_4_7 = {1,       21,      378,      6832, 108096,
                                                  1714560, 27276288, P(35) - 3553 * P(13)};
inline const std::vector<BigInt> kTriple_3_4_10 = {
    1, 21, 378, 10416, 140352, 1994112, 29598720, 458661888, 109389 * P(16), 213759 * P(19), P(44) - 14273 * P(23)};

/// Moment values quoted with their worked examples.
inline const BigInt kDoubleMoment_4_3_2_q3 = 35356672;
inline const BigInt kDoubleMoment_6_5_0_q4 = BigInt(37014016) * P(20);
inline const BigInt kRowsMoment_5_2_4_q3 = 24413824;
inline const BigInt kTripleMoment_5_3_q3 = BigInt(3563904) * P(18);
inline const BigInt kTripleMoment_7_3_4_q3 = BigInt(4243395) * P(29);

/// Moments of a 3 x 3 block over one free row: 2^(4q-8) (2^3q + 13 2^2q + 66 2^q + 176).
inline BigInt rows_1_2_3_moment(int q) {
  const BigInt inner = P(3 * q) + 13 * P(2 * q) + 66 * P(q) + 176;
  return to_integer(Rational(inner * P(4 * q), P(8)), "rows moment");
}

}  // namespace persym::ref

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "persym/errors.hpp"

namespace persym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e for e >= 0.
inline BigInt pow2(int e) {
  if (e < 0) throw DomainError("pow2: negative exponent " + std::to_string(e));
  BigInt v = 1;
  v <<= e;
  return v;
}

/// 2^e as an exact rational, any sign of e.
inline Rational rpow2(int e) {
  if (e >= 0) return Rational(pow2(e));
  return Rational(BigInt(1), pow2(-e));
}

/// Converts an exact rational to an integer, throwing if it is not integral.
inline BigInt to_integer(const Rational& r, const char* context) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw ConsistencyError(std::string(context) + ": value " + r.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace persym

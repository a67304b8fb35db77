#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "flatchain/errors.hpp"

namespace flatchain {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default cap on explicitly materialized sets and on brute-force sweep sizes.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Binomial coefficient C(x, i) by the multiplicative formula with an exact
/// division at every step. C(x, i) = 0 for i > x, and C(0, 0) = 1.
inline BigInt binom(std::int64_t x, std::int64_t i) {
  if (x < 0 || i < 0) {
    throw domain_error("binom: negative argument");
  }
  if (i > x) return 0;
  i = std::min(i, x - i);
  BigInt r = 1;
  for (std::int64_t j = 1; j <= i; ++j) {
    r *= x - i + j;
    r /= j;
  }
  return r;
}

inline Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw domain_error("rational with zero denominator");
  return Rational(p, q);
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline BigInt floor_of(const Rational& r) {
  BigInt p = numerator(r);
  BigInt q = denominator(r);  // always positive
  BigInt quot = p / q;        // truncates toward zero
  if (p < 0 && quot * q != p) quot -= 1;
  return quot;
}

/// Smallest integer >= r.
inline BigInt ceil_of(const Rational& r) {
  BigInt f = floor_of(r);
  return f == r ? f : f + 1;
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Canonical "p/q" form; the denominator is always printed.
inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses a nonnegative decimal integer of arbitrary length.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    throw domain_error("not a nonnegative decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

/// Parses "p/q" or a bare integer "p". Signs are rejected; callers that need
/// strictly positive values check for zero themselves.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt p = parse_bigint(text.substr(0, slash));
  BigInt q = parse_bigint(text.substr(slash + 1));
  return make_rational(p, q);
}

}  // namespace flatchain

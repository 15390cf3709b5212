#pragma once

// Exact arithmetic helpers shared by every module: big integers, rationals,
// binomials and Catalan numbers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nckit/error.hpp"

namespace nckit {

// Expression templates off: every arithmetic result is a concrete value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Cat_n = C(2n, n) / (n + 1).
inline BigInt catalan(std::int64_t n) {
  if (n < 0) throw invalid_input("catalan: n must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

inline BigInt ipow(BigInt base, std::uint64_t e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Always rendered as "p/q" with q >= 1, including integers ("5/1").
inline std::string to_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw invalid_input("empty integer literal");
  s = s.substr(first, last - first + 1);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw invalid_input("malformed integer literal '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw invalid_input("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt p = parse_bigint(text.substr(0, slash));
  BigInt q = parse_bigint(text.substr(slash + 1));
  if (q == 0) throw invalid_input("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace nckit

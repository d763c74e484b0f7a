#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hopfind/errors.hpp"

namespace hopfind {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept canonical by the backend at all times:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Strict parser for the canonical form above (optional leading '-').
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] { throw usage_error("bad rational literal: '" + std::string(s) + "'"); };
  size_t pos = 0;
  auto read_digits = [&](bool allow_sign) {
    size_t start = pos;
    if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
    size_t first_digit = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == first_digit) fail();
    return std::string(s.substr(start, pos - start));
  };
  std::string num = read_digits(true);
  std::string den = "1";
  if (pos < s.size()) {
    if (s[pos] != '/') fail();
    ++pos;
    den = read_digits(false);
    if (pos != s.size()) fail();
  }
  Integer d(den);
  if (d == 0) fail();
  return Rational(Integer(num), d);
}

}  // namespace hopfind

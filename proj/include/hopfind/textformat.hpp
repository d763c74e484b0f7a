#pragma once

#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "hopfind/cyclotomic.hpp"
#include "hopfind/linalg.hpp"

namespace hopfind {

namespace detail {

// One term "coeff * token^power" rendered into the running sum `out`.
// `first` handles sign placement: leading "-x" vs infix " - x".
inline void append_term(std::string& out, const Rational& coeff, const std::string& token, size_t power,
                        bool& first) {
  Rational a = coeff;
  bool neg = a < 0;
  if (neg) a = -a;
  if (first) {
    if (neg) out += "-";
    first = false;
  } else {
    out += neg ? " - " : " + ";
  }
  std::string base = token;
  if (power >= 2) base += "^" + std::to_string(power);
  if (token.empty()) {
    out += rational_to_string(a);
  } else if (a == 1) {
    out += base;
  } else {
    out += rational_to_string(a) + "*" + base;
  }
}

}  // namespace detail

/// Canonical human syntax for a cyclotomic number. Grammar:
///   value  := "0" | term (" + " term | " - " term)*
///   term   := rational | [rational "*"] gen ["^" k]      (k >= 2)
///   gen    := "i"            when the conductor is 4
///           | "z" conductor  otherwise
/// Coefficients +-1 on generator terms are folded into the sign. Examples:
/// "0", "-1", "1/2", "i", "1 - i", "1/2 + 1/2*i", "z8 - z8^3", "2*z8^2".
inline std::string to_string(const CycNum& v) {
  if (v.is_zero()) return "0";
  std::string gen = v.conductor() == 4 ? "i" : "z" + std::to_string(v.conductor());
  std::string out;
  bool first = true;
  const auto& c = v.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    detail::append_term(out, c[j], j == 0 ? "" : gen, j, first);
  }
  return out;
}

inline std::string approx_string(const CycNum& v) {
  std::complex<double> z = v.approx();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

inline std::ostream& operator<<(std::ostream& os, const CycNum& v) { return os << to_string(v); }

inline std::string to_string(const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << to_string(v); }

inline std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_string(m); }

/// Linear combination over named basis elements: "1/2*z + 1/2*xz - 1/2*yz".
/// Non-rational coefficients are parenthesized: "(1 - i)*z".
inline std::string combo_string(const std::vector<std::string>& names, const Vector& coords) {
  if (coords.dim() != names.size()) throw usage_error("combo_string: name/coordinate count mismatch");
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coords.dim(); ++i) {
    const CycNum& c = coords[i];
    if (c.is_zero()) continue;
    if (auto r = c.as_rational()) {
      detail::append_term(out, *r, names[i], 1, first);
    } else {
      if (!first) out += " + ";
      first = false;
      out += "(" + to_string(c) + ")*" + names[i];
    }
  }
  return first ? "0" : out;
}

}  // namespace hopfind

#pragma once

#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/rational.hpp"

namespace hopfind::detail {

// Dense univariate polynomial over Q: coefficients in ascending degree,
// no trailing zeros, zero polynomial = empty vector.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(c));
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return poly_trim(std::move(a));
}

inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (b.empty()) throw usage_error("polynomial division by zero");
  a = poly_trim(std::move(a));
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return {poly_trim(std::move(q)), std::move(a)};
}

inline Poly poly_divexact(Poly a, const Poly& b) {
  auto [q, r] = poly_divmod(std::move(a), b);
  if (!r.empty()) throw math_error("polynomial division left a remainder");
  return q;
}

// Monic gcd g with Bezout coefficients: u*a + v*b = g.
struct PolyExtGcd {
  Poly g, u, v;
};

inline PolyExtGcd poly_ext_gcd(Poly a, Poly b) {
  Poly r0 = poly_trim(std::move(a)), r1 = poly_trim(std::move(b));
  Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

}  // namespace hopfind::detail

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/polynomial.hpp"
#include "hopfind/rational.hpp"

namespace hopfind {

namespace detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Phi_N over Q by the divisor recursion: (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline Poly cyclotomic_poly_q(unsigned N) {
  Poly xn(N + 1, Rational(0));
  xn[0] = -1;
  xn[N] = 1;
  if (N == 1) return xn;
  Poly denom{Rational(1)};
  for (unsigned d = 1; d < N; ++d)
    if (N % d == 0) denom = poly_mul(denom, cyclotomic_poly_q(d));
  return poly_divexact(std::move(xn), denom);
}

// Per-conductor data shared by every CycNum with that conductor. Built once,
// then read-only.
struct CycContext {
  unsigned N = 1;
  unsigned phi = 1;
  Poly modulus;  // Phi_N, monic, degree phi
  // zeta^t in the power basis, t < max(N, 2*phi - 1). Covers products
  // (degree <= 2*phi - 2) and Galois images (exponents < N).
  std::vector<std::vector<Rational>> zeta_pow;
};

inline const CycContext& cyc_context(unsigned N) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycContext>> cache;
  if (N < 1) throw usage_error("conductor must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;
  auto ctx = std::make_unique<CycContext>();
  ctx->N = N;
  ctx->modulus = cyclotomic_poly_q(N);
  ctx->phi = static_cast<unsigned>(poly_deg(ctx->modulus));
  unsigned count = std::max(N, 2 * ctx->phi - 1);
  std::vector<Rational> cur(ctx->phi, Rational(0));
  cur[0] = 1;
  for (unsigned t = 0; t < count; ++t) {
    ctx->zeta_pow.push_back(cur);
    std::vector<Rational> next(ctx->phi, Rational(0));
    Rational overflow = cur[ctx->phi - 1];
    for (unsigned j = ctx->phi - 1; j >= 1; --j) next[j] = cur[j - 1];
    if (overflow != 0)
      for (unsigned j = 0; j < ctx->phi; ++j) next[j] -= overflow * ctx->modulus[j];
    cur = std::move(next);
  }
  const CycContext& ref = *ctx;
  cache.emplace(N, std::move(ctx));
  return ref;
}

}  // namespace detail

/// Coefficients of Phi_N over Z, ascending degree, monic, degree phi(N).
inline std::vector<Integer> cyclotomic_polynomial(unsigned N) {
  if (N < 1) throw usage_error("cyclotomic_polynomial: N must be >= 1");
  auto p = detail::cyclotomic_poly_q(N);
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (!is_integer(c)) throw math_error("cyclotomic polynomial has a non-integer coefficient");
    out.push_back(numerator(c));
  }
  return out;
}

/// An element of the cyclotomic field Q(zeta_N), stored as phi(N) rational
/// coordinates in the power basis 1, zeta, ..., zeta^{phi(N)-1} and kept fully
/// reduced modulo Phi_N, so equality is a coordinate comparison.
///
/// Conductor-1 values are plain rationals and embed canonically into any
/// Q(zeta_N); mixing two distinct nontrivial conductors is an error.
class CycNum {
 public:
  CycNum() : conductor_(1), coeffs_{Rational(0)} {}
  CycNum(int v) : conductor_(1), coeffs_{Rational(v)} {}
  CycNum(const Integer& v) : conductor_(1), coeffs_{Rational(v)} {}
  CycNum(Rational r) : conductor_(1), coeffs_{std::move(r)} {}

  static CycNum zero(unsigned N) { return CycNum(N, std::vector<Rational>(detail::cyc_context(N).phi, Rational(0))); }

  static CycNum one(unsigned N) {
    auto c = zero(N);
    c.coeffs_[0] = 1;
    return c;
  }

  /// zeta_N as an element of Q(zeta_N) (reduced: zeta_1 = 1, zeta_2 = -1).
  static CycNum zeta(unsigned N) {
    const auto& ctx = detail::cyc_context(N);
    return CycNum(N, ctx.zeta_pow[1 % ctx.zeta_pow.size()]);
  }

  /// zeta_N^k for any integer k (negative exponents allowed).
  static CycNum zeta_pow(unsigned N, long long k) {
    const auto& ctx = detail::cyc_context(N);
    long long t = ((k % N) + N) % N;
    return CycNum(N, ctx.zeta_pow[static_cast<size_t>(t)]);
  }

  static CycNum from_coeffs(unsigned N, std::vector<Rational> coeffs) {
    const auto& ctx = detail::cyc_context(N);
    if (coeffs.size() != ctx.phi)
      throw usage_error("CycNum: expected " + std::to_string(ctx.phi) + " coefficients for conductor " +
                        std::to_string(N) + ", got " + std::to_string(coeffs.size()));
    return CycNum(N, std::move(coeffs));
  }

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    for (size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    for (size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] -= y.coeffs_[j];
    return x;
  }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = aligned(a, b);
    if (x.conductor_ == 1) return CycNum(x.coeffs_[0] * y.coeffs_[0]);
    const auto& ctx = detail::cyc_context(x.conductor_);
    std::vector<Rational> conv(2 * ctx.phi - 1, Rational(0));
    for (size_t i = 0; i < ctx.phi; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < ctx.phi; ++j) conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + ctx.phi);
    for (size_t t = ctx.phi; t < conv.size(); ++t) {
      if (conv[t] == 0) continue;
      const auto& zp = ctx.zeta_pow[t];
      for (size_t j = 0; j < ctx.phi; ++j) out[j] += conv[t] * zp[j];
    }
    return CycNum(x.conductor_, std::move(out));
  }

  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum scalar_times(const Rational& r) const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

  CycNum inv() const {
    if (is_zero()) throw usage_error("CycNum: division by zero");
    if (conductor_ == 1) return CycNum(Rational(1) / coeffs_[0]);
    const auto& ctx = detail::cyc_context(conductor_);
    auto eg = detail::poly_ext_gcd(detail::poly_trim(coeffs_), ctx.modulus);
    if (detail::poly_deg(eg.g) != 0) throw math_error("CycNum: modulus is not coprime to the element");
    eg.u.resize(ctx.phi, Rational(0));
    return CycNum(conductor_, std::move(eg.u));
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.conductor_ == 1 || b.conductor_ == 1) {
      auto [x, y] = aligned(a, b);
      return x.coeffs_ == y.coeffs_;
    }
    return false;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// The ring automorphism zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
  CycNum galois(long long k) const {
    const unsigned N = conductor_;
    unsigned long long kk = static_cast<unsigned long long>(((k % N) + N) % N);
    if (std::gcd(kk, static_cast<unsigned long long>(N)) != 1)
      throw usage_error("galois: exponent " + std::to_string(k) + " is not coprime to conductor " + std::to_string(N));
    const auto& ctx = detail::cyc_context(N);
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (size_t j = 0; j < ctx.phi; ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& zp = ctx.zeta_pow[(j * kk) % N];
      for (size_t t = 0; t < ctx.phi; ++t) out[t] += coeffs_[j] * zp[t];
    }
    return CycNum(N, std::move(out));
  }

  /// Canonical embedding into Q(zeta_L) for a multiple L of the conductor
  /// (zeta_N = zeta_L^{L/N}).
  CycNum embed(unsigned L) const {
    if (L % conductor_ != 0)
      throw usage_error("embed: target conductor " + std::to_string(L) + " is not a multiple of " +
                        std::to_string(conductor_));
    if (L == conductor_) return *this;
    unsigned q = L / conductor_;
    const auto& ctx = detail::cyc_context(L);
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& zp = ctx.zeta_pow[j * q];
      for (size_t t = 0; t < ctx.phi; ++t) out[t] += coeffs_[j] * zp[t];
    }
    return CycNum(L, std::move(out));
  }

  /// Membership test for the subring Z[zeta_m] of Q(zeta_N), m | N, with
  /// zeta_m = zeta_N^{N/m}. Returns the integer coordinates in the power
  /// basis 1, zeta_m, ..., zeta_m^{phi(m)-1} when the element lies in the
  /// subring, nullopt otherwise.
  std::optional<std::vector<Integer>> in_subring_z_zeta(unsigned m) const {
    if (m == 0 || conductor_ % m != 0)
      throw usage_error("in_subring_z_zeta: m = " + std::to_string(m) + " does not divide conductor " +
                        std::to_string(conductor_));
    const auto& ctx = detail::cyc_context(conductor_);
    const unsigned phim = detail::euler_phi(m);
    const unsigned step = conductor_ / m;

    // Solve B c = coeffs over Q, where column j of B is zeta_m^j in the
    // power basis of zeta_N. B has full column rank, so the solution is
    // unique when it exists.
    const size_t rows = ctx.phi, cols = phim;
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (size_t j = 0; j < cols; ++j) {
      const auto& zp = ctx.zeta_pow[j * step];
      for (size_t i = 0; i < rows; ++i) aug[i][j] = zp[i];
    }
    for (size_t i = 0; i < rows; ++i) aug[i][cols] = coeffs_[i];

    size_t row = 0;
    std::vector<size_t> pivot_row(cols, SIZE_MAX);
    for (size_t col = 0; col < cols && row < rows; ++col) {
      size_t sel = row;
      while (sel < rows && aug[sel][col] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(aug[sel], aug[row]);
      Rational p = aug[row][col];
      for (auto& v : aug[row]) v /= p;
      for (size_t r = 0; r < rows; ++r) {
        if (r == row || aug[r][col] == 0) continue;
        Rational f = aug[r][col];
        for (size_t cc = col; cc <= cols; ++cc) aug[r][cc] -= f * aug[row][cc];
      }
      pivot_row[col] = row;
      ++row;
    }
    for (size_t r = row; r < rows; ++r)
      if (aug[r][cols] != 0) return std::nullopt;  // not even in Q(zeta_m)
    std::vector<Integer> out(cols, Integer(0));
    for (size_t col = 0; col < cols; ++col) {
      if (pivot_row[col] == SIZE_MAX) continue;
      const Rational& v = aug[pivot_row[col]][cols];
      if (!is_integer(v)) return std::nullopt;
      out[col] = numerator(v);
    }
    return out;
  }

  /// Display-only complex approximation; never used in a mathematical path.
  std::complex<double> approx() const {
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, 2.0 * pi / static_cast<double>(conductor_));
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = coeffs_.size(); j-- > 0;)
      acc = acc * z + std::complex<double>(numerator(coeffs_[j]).convert_to<double>() /
                                           denominator(coeffs_[j]).convert_to<double>());
    return acc;
  }

 private:
  CycNum(unsigned N, std::vector<Rational> coeffs) : conductor_(N), coeffs_(std::move(coeffs)) {}

  static CycNum promoted(const CycNum& a, unsigned N) {
    auto r = zero(N);
    r.coeffs_[0] = a.coeffs_[0];
    return r;
  }

  static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return {a, b};
    if (a.conductor_ == 1) return {promoted(a, b.conductor_), b};
    if (b.conductor_ == 1) return {a, promoted(b, a.conductor_)};
    throw usage_error("conductor mismatch: " + std::to_string(a.conductor_) + " vs " + std::to_string(b.conductor_));
  }

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace hopfind

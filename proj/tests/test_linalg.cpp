#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfind/linalg.hpp"
#include "hopfind/textformat.hpp"

using namespace hopfind;

namespace {

const CycNum kI = CycNum::zeta(4);

struct Rng {
  std::mt19937 gen{987654};

  CycNum cyc(unsigned N = 4) {
    std::uniform_int_distribution<int> num(-4, 4);
    unsigned phi = detail::euler_phi(N);
    std::vector<Rational> c(phi);
    for (auto& x : c) x = Rational(num(gen));
    return CycNum::from_coeffs(N, std::move(c));
  }

  Matrix matrix(size_t r, size_t c, unsigned N = 4) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m(i, j) = cyc(N);
    return m;
  }

  // Invertible by construction: a product of random elementary operations
  // applied to the identity.
  Matrix invertible(size_t n) {
    Matrix m = Matrix::identity(n);
    std::uniform_int_distribution<size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int step = 0; step < 12; ++step) {
      size_t i = idx(gen), j = idx(gen);
      if (i == j) continue;
      CycNum f(coeff(gen));
      for (size_t k = 0; k < n; ++k) m(i, k) += f * m(j, k);
    }
    return m;
  }
};

}  // namespace

TEST_CASE("rref on canonical examples") {
  Matrix id = Matrix::identity(3);
  auto [r1, p1] = rref(id);
  CHECK(r1 == id);
  CHECK(p1 == std::vector<size_t>{0, 1, 2});

  Matrix z(2, 3);
  auto [r2, p2] = rref(z);
  CHECK(r2 == z);
  CHECK(p2.empty());

  // Rank 1: the second row is zeta_4 times the first.
  Matrix m = Matrix::from_rows({{CycNum(1), kI}, {kI, CycNum(-1)}});
  auto [r3, p3] = rref(m);
  CHECK(p3 == std::vector<size_t>{0});
  CHECK(r3 == Matrix::from_rows({{CycNum(1), kI}, {CycNum(0), CycNum(0)}}));
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Matrix::identity(3)).empty());
  CHECK(nullspace(Matrix(2, 2)).size() == 2);

  Matrix m(1, 2);
  m(0, 0) = CycNum(1);
  m(0, 1) = kI;
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vector{-kI, CycNum(1)});
  CHECK(m.apply(basis[0]).is_zero());
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng;
  for (int t = 0; t < 20; ++t) {
    size_t r = 1 + t % 4, c = 1 + (t * 7) % 5;
    Matrix m = rng.matrix(r, c);
    auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& v : basis) CHECK(m.apply(v).is_zero());
  }
}

TEST_CASE("kronecker product") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));

  Matrix s = Matrix::from_rows({{CycNum(2)}});
  Matrix b = Matrix::from_rows({{CycNum(1), kI}, {CycNum(3), CycNum(0)}});
  CHECK(kron(s, b) == b.scaled(CycNum(2)));

  Matrix d = Matrix::from_rows({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(-1)}});
  Matrix x = Matrix::from_rows({{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}});
  Matrix expect = Matrix::from_rows({
      {CycNum(0), CycNum(1), CycNum(0), CycNum(0)},
      {CycNum(1), CycNum(0), CycNum(0), CycNum(0)},
      {CycNum(0), CycNum(0), CycNum(0), CycNum(-1)},
      {CycNum(0), CycNum(0), CycNum(-1), CycNum(0)},
  });
  CHECK(kron(d, x) == expect);

  Rng rng;
  for (int t = 0; t < 8; ++t) {
    Matrix a = rng.matrix(2, 2), bb = rng.matrix(2, 2), cc = rng.matrix(2, 2);
    CHECK(kron(kron(a, bb), cc) == kron(a, kron(bb, cc)));
    CHECK(trace(kron(a, bb)) == trace(a) * trace(bb));
  }
}

TEST_CASE("trace, transpose, product, inverse") {
  CHECK(trace(Matrix::identity(5)) == CycNum(5));

  Rng rng;
  Matrix m = rng.matrix(3, 4);
  CHECK(transpose(transpose(m)) == m);

  Matrix u = Matrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(0), CycNum(1)}});
  Matrix uinv = inverse(u);
  CHECK(uinv == Matrix::from_rows({{CycNum(1), CycNum(-1)}, {CycNum(0), CycNum(1)}}));
  CHECK(uinv * u == Matrix::identity(2));

  for (int t = 0; t < 6; ++t) {
    Matrix v = rng.invertible(4);
    CHECK(inverse(v) * v == Matrix::identity(4));
  }

  Matrix sing = Matrix::from_rows({{CycNum(1), CycNum(2)}, {CycNum(2), CycNum(4)}});
  CHECK_THROWS_AS(inverse(sing), math_error);
  CHECK_THROWS_AS(rng.matrix(2, 3) * rng.matrix(2, 3), usage_error);
  CHECK_THROWS_AS(trace(rng.matrix(2, 3)), usage_error);
}

TEST_CASE("exact solve") {
  Matrix a = Matrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(0), CycNum(1)}});
  Matrix b = Matrix::from_rows({{CycNum(3)}, {kI}});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // Inconsistent system.
  Matrix c = Matrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(1), CycNum(1)}});
  Matrix rhs = Matrix::from_rows({{CycNum(1)}, {CycNum(2)}});
  CHECK_FALSE(solve(c, rhs).has_value());

  // Underdetermined but consistent.
  Matrix w(1, 3);
  w(0, 0) = CycNum(1);
  w(0, 2) = kI;
  Matrix r1 = Matrix::from_rows({{CycNum(5)}});
  auto y = solve(w, r1);
  REQUIRE(y.has_value());
  CHECK(w * *y == r1);
}

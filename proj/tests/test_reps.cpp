#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hopfind/builtins.hpp"
#include "hopfind/reps.hpp"
#include "hopfind/textformat.hpp"

using namespace hopfind;

namespace {

const AlgebraBundle& h8_bundle() {
  static const AlgebraBundle bundle = h8();
  return bundle;
}

const AlgebraBundle& group(const std::string& name) {
  static std::map<std::string, AlgebraBundle> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, bundled_group(name)).first;
  return it->second;
}

const Representation& h8_chi(size_t k) { return h8_bundle().modules.at(k - 1).rep; }
const HopfAutomorphism& h8_tau(size_t k) { return h8_bundle().automorphisms.at(k - 1).aut; }

Representation trivial_rep(const std::shared_ptr<const HopfAlgebra>& h) {
  std::vector<Matrix> mats(h->dim);
  for (unsigned i = 0; i < h->dim; ++i) mats[i] = Matrix::from_rows({{h->counit[i]}});
  return check_representation(h, std::move(mats));
}

}  // namespace

TEST_CASE("check_representation accepts the built-ins and the trivial module") {
  for (const auto& mod : h8_bundle().modules)
    CHECK_NOTHROW(check_representation(h8_bundle().algebra, mod.rep.matrices));
  for (const char* name : {"c5", "s3", "q8"}) CHECK_NOTHROW(trivial_rep(group(name).algebra));
}

TEST_CASE("check_representation rejects a corrupted module with a witness") {
  std::vector<Matrix> mats = h8_chi(5).matrices;
  mats[4] = Matrix::identity(2);
  try {
    check_representation(h8_bundle().algebra, std::move(mats));
    FAIL("expected math_error");
  } catch (const math_error& e) {
    // First failing pair in scan order involves z.
    CHECK(std::string(e.what()).find("z") != std::string::npos);
  }
}

TEST_CASE("characters") {
  Vector chi5 = character(h8_chi(5)).values;
  CHECK(chi5 == Vector{CycNum(2), CycNum(0), CycNum(0), CycNum(-2), CycNum(0), CycNum(0), CycNum(0), CycNum(0)});

  CHECK(character(trivial_rep(h8_bundle().algebra)).values == h8_bundle().algebra->counit);

  Representation reg = regular_representation(h8_bundle().algebra);
  Vector chi_r = character(reg).values;
  Vector expect(8);
  expect[0] = CycNum(8);
  CHECK(chi_r == expect);

  // chi_R = sum over irreducibles of dim * chi.
  Vector sum(8);
  for (const auto& mod : h8_bundle().modules)
    sum += character(mod.rep).values.scaled(CycNum(static_cast<int>(mod.rep.vdim)));
  CHECK(sum == chi_r);
}

TEST_CASE("twisting functor") {
  const Representation& rho = h8_chi(5);
  CHECK(twist(rho, h8_tau(1)).matrices == rho.matrices);

  for (size_t k : {2, 3, 4}) {
    Representation once = twist(rho, h8_tau(k));
    CHECK(twist(once, h8_tau(k)).matrices == rho.matrices);
  }

  // chi3 twisted by tau3 carries the character chi4.
  Representation twisted = twist(h8_chi(3), h8_tau(3));
  CHECK(character(twisted).values == character(h8_chi(4)).values);
}

TEST_CASE("anti-homomorphism law across the Klein four-group") {
  const auto& h = *h8_bundle().algebra;
  const Representation& rho = h8_chi(5);
  for (const auto& a : h8_bundle().automorphisms)
    for (const auto& b : h8_bundle().automorphisms) {
      Representation lhs = twist(twist(rho, a.aut), b.aut);
      Representation rhs = twist(rho, compose(h, a.aut, b.aut));
      CHECK(lhs.matrices == rhs.matrices);
    }
}

TEST_CASE("duals and twisted duals") {
  const Representation& rho = h8_chi(5);
  CHECK(twisted_dual(rho, h8_tau(1)).matrices == dual(rho).matrices);

  for (size_t k : {1, 2, 3, 4}) {
    Representation once = twisted_dual(rho, h8_tau(k));
    CHECK_NOTHROW(check_representation(rho.parent, once.matrices));
    // Double twisted dual is the double dual; with S^2 = Id that is rho.
    CHECK(twisted_dual(once, h8_tau(k)).matrices == rho.matrices);
  }

  // Group algebra: the dual character is chi composed with inversion.
  const auto& c5 = group("c5");
  for (const auto& mod : c5.modules) {
    Vector dvals = character(dual(mod.rep)).values;
    Vector expect(5);
    for (unsigned g = 0; g < 5; ++g) expect[g] = character(mod.rep).values[c5.group->inverse[g]];
    CHECK(dvals == expect);
  }
}

TEST_CASE("functor laws of F_tau") {
  const auto& triv = h8_chi(1);
  for (const auto& na : h8_bundle().automorphisms) {
    CHECK(twist(triv, na.aut).matrices == triv.matrices);
    Representation prod = tensor_product(h8_chi(5), h8_chi(3));
    CHECK(twist(prod, na.aut).matrices == tensor_product(twist(h8_chi(5), na.aut), twist(h8_chi(3), na.aut)).matrices);
    CHECK(twist(dual(h8_chi(5)), na.aut).matrices == dual(twist(h8_chi(5), na.aut)).matrices);
  }
}

TEST_CASE("twisted power modules") {
  const Representation& rho = h8_chi(5);
  CHECK(twisted_power_module(rho, h8_tau(1), 1).matrices == rho.matrices);

  // Trivial module stays one-dimensional trivial for every admissible pair.
  const auto& triv = h8_chi(1);
  for (const auto& na : h8_bundle().automorphisms)
    for (unsigned m : {2u, 4u}) {
      Representation power = twisted_power_module(triv, na.aut, m);
      CHECK(power.vdim == 1);
      for (const auto& mat : power.matrices) CHECK(mat == Matrix::identity(1));
    }

  // Grouplike expansion: g acts as rho(g) (x) rho(tau(g)) (x) rho(tau^2(g)).
  const auto& q8 = group("q8");
  const auto& rot3 = q8.automorphisms.at(2);
  REQUIRE(rot3.name == "rot3");
  const Representation& dim2 = q8.modules.at(4).rep;
  Representation cube = twisted_power_module(dim2, rot3.aut, 3);
  for (unsigned g = 0; g < 8; ++g) {
    unsigned tg = 0, ttg = 0;
    for (unsigned p = 0; p < 8; ++p) {
      if (rot3.aut.matrix(p, g) == CycNum(1)) tg = p;
    }
    for (unsigned p = 0; p < 8; ++p) {
      if (rot3.aut.matrix(p, tg) == CycNum(1)) ttg = p;
    }
    CHECK(cube.matrices[g] == kron(kron(dim2.matrices[g], dim2.matrices[tg]), dim2.matrices[ttg]));
  }

  CHECK_THROWS_AS(twisted_power_module(rho, h8_tau(3), 3), usage_error);
}

TEST_CASE("invariants") {
  // Trivial module: the whole line.
  CHECK(invariants(h8_chi(1)).size() == 1);

  // Regular module: exactly the line spanned by Lambda.
  Representation reg = regular_representation(h8_bundle().algebra);
  auto inv = invariants(reg);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == integral_of(*h8_bundle().algebra));

  // chi5: no invariants, and trace rho(Lambda) = 0.
  auto inv5 = invariants(h8_chi(5));
  CHECK(inv5.empty());
  CHECK(trace(rep_apply(h8_chi(5), integral_of(*h8_bundle().algebra))) == CycNum(0));
}

TEST_CASE("rho(Lambda) is the invariant projection for every built-in") {
  auto check_projection = [](const AlgebraBundle& bundle) {
    const auto& h = *bundle.algebra;
    for (const auto& mod : bundle.modules) {
      Matrix p = rep_apply(mod.rep, integral_of(h));
      CHECK(p * p == p);
      CHECK(trace(p) == CycNum(static_cast<int>(invariants(mod.rep).size())));
    }
  };
  check_projection(h8_bundle());
  check_projection(group("s3"));
  check_projection(group("q8"));
  Representation reg = regular_representation(h8_bundle().algebra);
  Matrix p = rep_apply(reg, integral_of(*h8_bundle().algebra));
  CHECK(p * p == p);
  CHECK(trace(p) == CycNum(1));
}

TEST_CASE("hom spaces and Schur") {
  CHECK(hom_space(h8_chi(5), h8_chi(5)).size() == 1);
  auto end5 = hom_space(h8_chi(5), h8_chi(5));
  CHECK(end5[0] == Matrix::identity(2).scaled(end5[0](0, 0)));

  CHECK(hom_space(h8_chi(1), h8_chi(2)).empty());

  Representation reg = regular_representation(h8_bundle().algebra);
  CHECK(hom_space(reg, reg).size() == 8);
}

TEST_CASE("absolute irreducibility") {
  for (const auto& mod : h8_bundle().modules) CHECK(is_absolutely_irreducible(mod.rep));
  CHECK(is_absolutely_irreducible(group("s3").modules.at(2).rep));
  Representation doubled = direct_sum(h8_chi(1), h8_chi(1));
  CHECK_FALSE(is_absolutely_irreducible(doubled));
  CHECK(hom_space(doubled, doubled).size() == 4);
}

TEST_CASE("character additivity on direct sums") {
  Representation sum = direct_sum(h8_chi(3), h8_chi(5));
  CHECK(character(sum).values == character(h8_chi(3)).values + character(h8_chi(5)).values);
}

TEST_CASE("cyclic shift commutes with the twisted action of Lambda") {
  auto check_commutes = [](const AlgebraBundle& bundle) {
    const auto& h = *bundle.algebra;
    for (const auto& mod : bundle.modules)
      for (const auto& na : bundle.automorphisms)
        for (unsigned m : {2u, 3u, 4u}) {
          if (m % na.aut.order != 0) continue;
          Matrix p = twisted_power_action(mod.rep, na.aut, m, integral_of(h));
          Matrix alpha = cyclic_shift_matrix(mod.rep.vdim, m);
          CHECK(alpha * p == p * alpha);
        }
  };
  check_commutes(h8_bundle());
  check_commutes(group("c4"));
  check_commutes(group("q8"));
}

TEST_CASE("parent mismatch is rejected") {
  CHECK_THROWS_AS(tensor_product(h8_chi(1), group("c2").modules.at(0).rep), usage_error);
  CHECK_THROWS_AS(hom_space(h8_chi(1), trivial_rep(group("s3").algebra)), usage_error);
}

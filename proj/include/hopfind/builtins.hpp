#pragma once

#include <array>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/reps.hpp"

namespace hopfind {

/// A finite group by its multiplication table. Identity and inverses are
/// derived and the group laws are verified on construction.
struct GroupTable {
  unsigned order = 0;
  std::vector<std::vector<unsigned>> mult;
  unsigned identity = 0;
  std::vector<unsigned> inverse;
  std::vector<std::string> names;

  std::string name_of(unsigned g) const {
    if (g < names.size() && !names[g].empty()) return names[g];
    return "g" + std::to_string(g);
  }
};

inline GroupTable make_group_table(std::vector<std::vector<unsigned>> mult, std::vector<std::string> names) {
  GroupTable g;
  g.order = static_cast<unsigned>(mult.size());
  if (g.order == 0) throw usage_error("group table is empty");
  for (const auto& row : mult) {
    if (row.size() != g.order) throw usage_error("group table is not square");
    for (unsigned v : row)
      if (v >= g.order) throw math_error("group table is not closed");
  }
  g.mult = std::move(mult);
  g.names = std::move(names);

  bool found = false;
  for (unsigned e = 0; e < g.order && !found; ++e) {
    bool ok = true;
    for (unsigned x = 0; x < g.order; ++x)
      if (g.mult[e][x] != x || g.mult[x][e] != x) ok = false;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw math_error("group table has no identity");

  g.inverse.assign(g.order, g.order);
  for (unsigned x = 0; x < g.order; ++x) {
    for (unsigned y = 0; y < g.order; ++y)
      if (g.mult[x][y] == g.identity && g.mult[y][x] == g.identity) g.inverse[x] = y;
    if (g.inverse[x] == g.order) throw math_error("group element " + g.name_of(x) + " has no inverse");
  }

  for (unsigned a = 0; a < g.order; ++a)
    for (unsigned b = 0; b < g.order; ++b)
      for (unsigned c = 0; c < g.order; ++c)
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
          throw math_error("group table is not associative at (" + g.name_of(a) + ", " + g.name_of(b) + ", " +
                           g.name_of(c) + ")");
  return g;
}

inline unsigned element_order(const GroupTable& g, unsigned x) {
  unsigned cur = x, order = 1;
  while (cur != g.identity) {
    cur = g.mult[cur][x];
    ++order;
  }
  return order;
}

inline unsigned group_exponent(const GroupTable& g) {
  unsigned e = 1;
  for (unsigned x = 0; x < g.order; ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

/// Powers g^k through the table (k >= 0).
inline unsigned group_power(const GroupTable& g, unsigned x, unsigned k) {
  unsigned cur = g.identity;
  for (unsigned s = 0; s < k; ++s) cur = g.mult[cur][x];
  return cur;
}

/// The group algebra k[G] over Q(zeta_N): basis = group elements,
/// Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
inline std::shared_ptr<const HopfAlgebra> group_algebra(const GroupTable& g, unsigned conductor) {
  auto h = std::make_shared<HopfAlgebra>();
  h->dim = g.order;
  h->conductor = conductor;
  h->basis_names = g.names;
  h->mult.assign(g.order, std::vector<Vector>(g.order));
  for (unsigned i = 0; i < g.order; ++i)
    for (unsigned j = 0; j < g.order; ++j) h->mult[i][j] = Vector::unit(g.order, g.mult[i][j]);
  h->unit = Vector::unit(g.order, g.identity);
  h->counit = Vector(g.order);
  for (unsigned i = 0; i < g.order; ++i) h->counit[i] = CycNum(1);
  for (unsigned i = 0; i < g.order; ++i) {
    SparseTensor t(2, g.order);
    t.add({i, i}, CycNum(1));
    h->comult.push_back(std::move(t));
  }
  Matrix s(g.order, g.order);
  for (unsigned i = 0; i < g.order; ++i) s(g.inverse[i], i) = CycNum(1);
  h->antipode = std::move(s);
  finalize(*h);
  return h;
}

/// Lift a group automorphism (as a permutation of elements) to a verified
/// Hopf automorphism of k[G].
inline HopfAutomorphism group_automorphism(const HopfAlgebra& kg, const GroupTable& g,
                                           const std::vector<unsigned>& perm) {
  if (perm.size() != g.order) throw usage_error("group_automorphism: permutation has wrong length");
  std::vector<bool> seen(g.order, false);
  for (unsigned v : perm) {
    if (v >= g.order || seen[v]) throw usage_error("group_automorphism: not a permutation");
    seen[v] = true;
  }
  for (unsigned a = 0; a < g.order; ++a)
    for (unsigned b = 0; b < g.order; ++b)
      if (perm[g.mult[a][b]] != g.mult[perm[a]][perm[b]])
        throw math_error("group_automorphism: morphism law fails at (" + g.name_of(a) + ", " + g.name_of(b) + ")");
  Matrix m(g.order, g.order);
  for (unsigned i = 0; i < g.order; ++i) m(perm[i], i) = CycNum(1);
  return check_automorphism(kg, m);
}

inline std::vector<unsigned> conjugation_perm(const GroupTable& g, unsigned t) {
  std::vector<unsigned> perm(g.order);
  for (unsigned x = 0; x < g.order; ++x) perm[x] = g.mult[t][g.mult[x][g.inverse[t]]];
  return perm;
}

/// A ready-to-use verified algebra: the algebra itself plus its named
/// automorphisms and named irreducible modules, and the group table when
/// the algebra is a group algebra.
struct AlgebraBundle {
  std::string name;
  std::shared_ptr<const HopfAlgebra> algebra;
  std::vector<NamedAutomorphism> automorphisms;
  std::vector<NamedModule> modules;
  std::optional<GroupTable> group;
};

namespace detail {

inline void assert_orthonormal_characters(const AlgebraBundle& bundle) {
  std::vector<Character> chars;
  for (const auto& mod : bundle.modules) chars.push_back(character(mod.rep));
  Matrix gram = orthogonality_check(*bundle.algebra, chars);
  if (gram != Matrix::identity(chars.size()))
    throw math_error(bundle.name + ": bundled characters are not orthonormal");
}

}  // namespace detail

/// The eight-dimensional Kac-Paljutkin algebra over Q(i), generated from the
/// presentation
///   x^2 = y^2 = 1,  xy = yx,  xz = zy,  yz = zx,  z^2 = (1 + x + y - xy)/2,
///   Delta(x) = x(x)x,  Delta(y) = y(x)y,
///   Delta(z) = (1/2)(1(x)1 + 1(x)x + y(x)1 - y(x)x)(z(x)z),
///   epsilon = 1 on generators,  S fixes x, y, z.
/// Basis order: 1, x, y, xy, z, xz, yz, xyz. The multiplication table and
/// the rest of the comultiplication are generated from the relations by
/// normal-form rewriting (never transcribed), and the whole construction is
/// re-verified before it is returned: axioms, the normalized integral, the
/// five characters, the automorphism group with its composition table.
inline AlgebraBundle h8() {
  const unsigned d = 8;
  auto idx = [](unsigned a, unsigned b, unsigned c) { return a + 2 * b + 4 * c; };

  auto h = std::make_shared<HopfAlgebra>();
  h->dim = d;
  h->conductor = 4;
  h->basis_names = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};

  // Normal form of (x^a1 y^b1 z^c1)(x^a2 y^b2 z^c2): moving x^a2 y^b2 left
  // through z swaps the two exponents (zx = yz, zy = xz); a trailing z^2
  // expands through the defining relation.
  auto word_product = [&](unsigned i, unsigned j) {
    unsigned a1 = i & 1, b1 = (i >> 1) & 1, c1 = (i >> 2) & 1;
    unsigned a2 = j & 1, b2 = (j >> 1) & 1, c2 = (j >> 2) & 1;
    if (c1) std::swap(a2, b2);
    unsigned a = a1 ^ a2, b = b1 ^ b2;
    Vector out(d);
    if (c1 + c2 <= 1) {
      out[idx(a, b, c1 + c2)] = CycNum(1);
      return out;
    }
    const CycNum half{Rational(1, 2)};
    out[idx(a, b, 0)] = half;
    out[idx(a ^ 1, b, 0)] = half;
    out[idx(a, b ^ 1, 0)] = half;
    out[idx(a ^ 1, b ^ 1, 0)] = -half;
    return out;
  };
  h->mult.assign(d, std::vector<Vector>(d));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) h->mult[i][j] = word_product(i, j);

  h->unit = Vector::unit(d, 0);
  h->counit = Vector(d);
  for (unsigned i = 0; i < d; ++i) h->counit[i] = CycNum(1);

  // S reverses words; on normal forms that swaps the x/y exponents exactly
  // when the word contains z.
  Matrix s(d, d);
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned c = 0; c < 2; ++c) s(c ? idx(b, a, 1) : idx(a, b, 0), idx(a, b, c)) = CycNum(1);
  h->antipode = std::move(s);

  // Delta on generators, extended multiplicatively to the rest of the basis.
  SparseTensor dx(2, d), dy(2, d), mask(2, d), zz(2, d), done(2, d);
  dx.add({1, 1}, CycNum(1));
  dy.add({2, 2}, CycNum(1));
  const CycNum half{Rational(1, 2)};
  mask.add({0, 0}, half);
  mask.add({0, 1}, half);
  mask.add({2, 0}, half);
  mask.add({2, 1}, -half);
  zz.add({4, 4}, CycNum(1));
  done.add({0, 0}, CycNum(1));
  SparseTensor dz = tensor_pointwise_product(*h, mask, zz);
  for (unsigned i = 0; i < d; ++i) {
    unsigned a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
    SparseTensor t = done;
    if (a) t = tensor_pointwise_product(*h, t, dx);
    if (b) t = tensor_pointwise_product(*h, t, dy);
    if (c) t = tensor_pointwise_product(*h, t, dz);
    h->comult.push_back(std::move(t));
  }

  finalize(*h);

  Vector golden_integral(d);
  for (unsigned i = 0; i < d; ++i) golden_integral[i] = CycNum(Rational(1, 8));
  if (integral_of(*h) != golden_integral) throw math_error("h8: computed integral differs from the known value");

  AlgebraBundle bundle;
  bundle.name = "h8";
  bundle.algebra = h;

  // The four automorphisms, given by their images of x, y, z and extended
  // multiplicatively. tau1 is the identity.
  auto make_auto = [&](Vector tx, Vector ty, Vector tz) {
    Matrix m(d, d);
    for (unsigned i = 0; i < d; ++i) {
      unsigned a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
      Vector img = Vector::unit(d, 0);
      if (a) img = multiply(*h, img, tx);
      if (b) img = multiply(*h, img, ty);
      if (c) img = multiply(*h, img, tz);
      for (unsigned j = 0; j < d; ++j) m(j, i) = img[j];
    }
    return check_automorphism(*h, m);
  };
  Vector ex = Vector::unit(d, 1), ey = Vector::unit(d, 2), ez = Vector::unit(d, 4);
  Vector t3z(d), t4z(d);
  t3z[4] = half;
  t3z[5] = half;
  t3z[6] = half;
  t3z[7] = -half;
  t4z[4] = -half;
  t4z[5] = half;
  t4z[6] = half;
  t4z[7] = half;
  bundle.automorphisms.push_back({"tau1", make_auto(ex, ey, ez)});
  bundle.automorphisms.push_back({"tau2", make_auto(ex, ey, Vector::unit(d, 7))});
  bundle.automorphisms.push_back({"tau3", make_auto(ey, ex, t3z)});
  bundle.automorphisms.push_back({"tau4", make_auto(ey, ex, t4z)});

  const std::array<unsigned, 4> golden_orders{1, 2, 2, 2};
  for (size_t i = 0; i < 4; ++i)
    if (bundle.automorphisms[i].aut.order != golden_orders[i])
      throw math_error("h8: automorphism " + bundle.automorphisms[i].name + " has unexpected order");

  // Klein four-group composition table, 1-based indices into tau1..tau4.
  const unsigned klein[4][4] = {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      Matrix prod = bundle.automorphisms[i].aut.matrix * bundle.automorphisms[j].aut.matrix;
      if (prod != bundle.automorphisms[klein[i][j] - 1].aut.matrix)
        throw math_error("h8: automorphisms do not compose as the Klein four-group");
    }

  // Irreducible modules: four one-dimensional ones given by their generator
  // scalars, and the two-dimensional one by explicit generator matrices.
  auto one_dim = [&](CycNum sx, CycNum sy, CycNum sz) {
    std::vector<Matrix> mats(d);
    for (unsigned i = 0; i < d; ++i) {
      unsigned a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
      CycNum v(1);
      if (a) v *= sx;
      if (b) v *= sy;
      if (c) v *= sz;
      mats[i] = Matrix::from_rows({{v}});
    }
    return check_representation(h, std::move(mats));
  };
  const CycNum i4 = CycNum::zeta(4);
  bundle.modules.push_back({"chi1", one_dim(CycNum(1), CycNum(1), CycNum(1))});
  bundle.modules.push_back({"chi2", one_dim(CycNum(1), CycNum(1), CycNum(-1))});
  bundle.modules.push_back({"chi3", one_dim(CycNum(-1), CycNum(-1), i4)});
  bundle.modules.push_back({"chi4", one_dim(CycNum(-1), CycNum(-1), -i4)});
  {
    Matrix mx = Matrix::from_rows({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(-1)}});
    Matrix my = Matrix::from_rows({{CycNum(-1), CycNum(0)}, {CycNum(0), CycNum(1)}});
    Matrix mz = Matrix::from_rows({{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}});
    std::vector<Matrix> mats(d);
    for (unsigned i = 0; i < d; ++i) {
      unsigned a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
      Matrix v = Matrix::identity(2);
      if (a) v = v * mx;
      if (b) v = v * my;
      if (c) v = v * mz;
      mats[i] = std::move(v);
    }
    bundle.modules.push_back({"chi5", check_representation(h, std::move(mats))});
  }

  const std::vector<std::vector<CycNum>> golden_chars = {
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, -1, -1, -1, -1},
      {CycNum(1), CycNum(-1), CycNum(-1), CycNum(1), i4, -i4, -i4, i4},
      {CycNum(1), CycNum(-1), CycNum(-1), CycNum(1), -i4, i4, i4, -i4},
      {2, 0, 0, -2, 0, 0, 0, 0},
  };
  for (size_t k = 0; k < 5; ++k) {
    Vector expect(d);
    for (unsigned i = 0; i < d; ++i) expect[i] = golden_chars[k][i];
    if (character(bundle.modules[k].rep).values != expect)
      throw math_error("h8: character of " + bundle.modules[k].name + " differs from the known table");
  }

  detail::assert_orthonormal_characters(bundle);
  return bundle;
}

namespace detail {

inline GroupTable cyclic_group(unsigned n) {
  std::vector<std::vector<unsigned>> mult(n, std::vector<unsigned>(n));
  std::vector<std::string> names(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
    names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return make_group_table(std::move(mult), std::move(names));
}

inline GroupTable symmetric3() {
  using P = std::array<unsigned, 3>;
  const std::vector<P> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto find = [&](const P& p) {
    for (unsigned k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return k;
    throw math_error("s3: composition left the permutation list");
  };
  std::vector<std::vector<unsigned>> mult(6, std::vector<unsigned>(6));
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      P comp;
      for (unsigned x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      mult[i][j] = find(comp);
    }
  return make_group_table(std::move(mult), names);
}

inline GroupTable dihedral4() {
  // Elements r^a s^b, index a + 4b, with s r = r^{-1} s.
  auto enc = [](unsigned a, unsigned b) { return a + 4 * b; };
  std::vector<std::vector<unsigned>> mult(8, std::vector<unsigned>(8));
  std::vector<std::string> names(8);
  for (unsigned a1 = 0; a1 < 4; ++a1)
    for (unsigned b1 = 0; b1 < 2; ++b1)
      for (unsigned a2 = 0; a2 < 4; ++a2)
        for (unsigned b2 = 0; b2 < 2; ++b2) {
          unsigned a = (a1 + (b1 ? 4 - a2 : a2)) % 4;
          mult[enc(a1, b1)][enc(a2, b2)] = enc(a, b1 ^ b2);
        }
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 2; ++b) {
      std::string n = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
      if (b) n += "s";
      names[enc(a, b)] = n.empty() ? "e" : n;
    }
  return make_group_table(std::move(mult), std::move(names));
}

inline GroupTable quaternion8() {
  // Index 2*axis + sign with axes (1, i, j, k).
  const unsigned ax_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const unsigned ax_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<unsigned>> mult(8, std::vector<unsigned>(8));
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) {
      unsigned t1 = i / 2, s1 = i % 2, t2 = j / 2, s2 = j % 2;
      mult[i][j] = 2 * ax_axis[t1][t2] + (s1 ^ s2 ^ ax_sign[t1][t2]);
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return make_group_table(std::move(mult), std::move(names));
}

}  // namespace detail

inline std::vector<std::string> bundled_group_names() {
  return {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "s3", "d4", "q8"};
}

/// Build a bundled group algebra by name (c1..c8, s3, d4, q8), with its
/// named automorphisms and a complete set of irreducible modules, everything
/// re-verified on the way out.
inline AlgebraBundle bundled_group(const std::string& name) {
  AlgebraBundle bundle;
  bundle.name = name;

  GroupTable g;
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '1' && name[1] <= '8') {
    g = detail::cyclic_group(static_cast<unsigned>(name[1] - '0'));
  } else if (name == "s3") {
    g = detail::symmetric3();
  } else if (name == "d4") {
    g = detail::dihedral4();
  } else if (name == "q8") {
    g = detail::quaternion8();
  } else {
    throw usage_error("unknown bundled group '" + name + "'");
  }

  const unsigned conductor = group_exponent(g);
  bundle.algebra = group_algebra(g, conductor);
  const auto& h = bundle.algebra;

  std::vector<unsigned> id_perm(g.order);
  for (unsigned i = 0; i < g.order; ++i) id_perm[i] = i;
  bundle.automorphisms.push_back({"id", group_automorphism(*h, g, id_perm)});

  if (name[0] == 'c') {
    const unsigned n = g.order;
    if (n >= 3) bundle.automorphisms.push_back({"inversion", group_automorphism(*h, g, g.inverse)});
    for (unsigned j = 0; j < n; ++j) {
      std::vector<Matrix> mats(n);
      for (unsigned k = 0; k < n; ++k)
        mats[k] = Matrix::from_rows({{CycNum::zeta_pow(n, static_cast<long long>(j) * k)}});
      bundle.modules.push_back({"chi" + std::to_string(j), check_representation(h, std::move(mats))});
    }
  } else if (name == "s3") {
    bundle.automorphisms.push_back({"conj_12", group_automorphism(*h, g, conjugation_perm(g, 1))});
    const std::array<int, 6> sign = {1, -1, -1, -1, 1, 1};
    std::vector<Matrix> triv(6), sgn(6), std2(6);
    const std::vector<std::array<unsigned, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                        {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    for (unsigned k = 0; k < 6; ++k) {
      triv[k] = Matrix::from_rows({{CycNum(1)}});
      sgn[k] = Matrix::from_rows({{CycNum(sign[k])}});
      // Standard 2-dim piece of the permutation action on sum-zero vectors,
      // basis u1 = e0 - e1, u2 = e1 - e2; coordinates (v0, -v2).
      Matrix m(2, 2);
      for (unsigned colid = 0; colid < 2; ++colid) {
        int v[3] = {0, 0, 0};
        v[perms[k][colid]] += 1;
        v[perms[k][colid + 1]] -= 1;
        m(0, colid) = CycNum(v[0]);
        m(1, colid) = CycNum(-v[2]);
      }
      std2[k] = std::move(m);
    }
    bundle.modules.push_back({"trivial", check_representation(h, std::move(triv))});
    bundle.modules.push_back({"sign", check_representation(h, std::move(sgn))});
    bundle.modules.push_back({"dim2", check_representation(h, std::move(std2))});
  } else if (name == "d4") {
    bundle.automorphisms.push_back({"conj_r", group_automorphism(*h, g, conjugation_perm(g, 1))});
    for (int er : {1, -1})
      for (int es : {1, -1}) {
        std::vector<Matrix> mats(8);
        for (unsigned a = 0; a < 4; ++a)
          for (unsigned b = 0; b < 2; ++b) {
            int v = (a % 2 ? er : 1) * (b ? es : 1);
            mats[a + 4 * b] = Matrix::from_rows({{CycNum(v)}});
          }
        std::string nm = "chi" + std::to_string((er == 1 ? 0 : 2) + (es == 1 ? 1 : 2));
        bundle.modules.push_back({nm, check_representation(h, std::move(mats))});
      }
    Matrix r = Matrix::from_rows({{CycNum(0), CycNum(-1)}, {CycNum(1), CycNum(0)}});
    Matrix s2 = Matrix::from_rows({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(-1)}});
    std::vector<Matrix> mats(8);
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 2; ++b) {
        Matrix v = Matrix::identity(2);
        for (unsigned t = 0; t < a; ++t) v = v * r;
        if (b) v = v * s2;
        mats[a + 4 * b] = std::move(v);
      }
    bundle.modules.push_back({"dim2", check_representation(h, std::move(mats))});
  } else if (name == "q8") {
    bundle.automorphisms.push_back({"conj_i", group_automorphism(*h, g, conjugation_perm(g, 2))});
    std::vector<unsigned> rot(8);
    const unsigned next_axis[4] = {0, 2, 3, 1};  // i -> j -> k -> i
    for (unsigned i = 0; i < 8; ++i) rot[i] = 2 * next_axis[i / 2] + i % 2;
    bundle.automorphisms.push_back({"rot3", group_automorphism(*h, g, rot)});

    unsigned chi_no = 1;
    for (int ai : {1, -1})
      for (int aj : {1, -1}) {
        std::vector<Matrix> mats(8);
        const int base[4] = {1, ai, aj, ai * aj};
        for (unsigned i = 0; i < 8; ++i) mats[i] = Matrix::from_rows({{CycNum(base[i / 2])}});
        bundle.modules.push_back({"chi" + std::to_string(chi_no++), check_representation(h, std::move(mats))});
      }
    const CycNum i4 = CycNum::zeta(4);
    std::vector<Matrix> axis(4);
    axis[0] = Matrix::identity(2);
    axis[1] = Matrix::from_rows({{i4, CycNum(0)}, {CycNum(0), -i4}});
    axis[2] = Matrix::from_rows({{CycNum(0), CycNum(-1)}, {CycNum(1), CycNum(0)}});
    axis[3] = Matrix::from_rows({{CycNum(0), -i4}, {-i4, CycNum(0)}});
    std::vector<Matrix> mats(8);
    for (unsigned i = 0; i < 8; ++i) mats[i] = i % 2 ? axis[i / 2].scaled(CycNum(-1)) : axis[i / 2];
    bundle.modules.push_back({"dim2", check_representation(h, std::move(mats))});
  }

  detail::assert_orthonormal_characters(bundle);
  bundle.group = std::move(g);
  return bundle;
}

}  // namespace hopfind

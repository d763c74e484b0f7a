#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/linalg.hpp"

namespace hopfind {

/// A finite-dimensional left H-module given by the matrices rho(b_i).
struct Representation {
  std::shared_ptr<const HopfAlgebra> parent;
  unsigned vdim = 0;
  std::vector<Matrix> matrices;
};

struct Character {
  std::shared_ptr<const HopfAlgebra> parent;
  Vector values;
};

inline void require_same_parent(const Representation& a, const Representation& b) {
  if (a.parent.get() != b.parent.get()) throw usage_error("representations have different parent algebras");
}

/// rho extended linearly: rho(x) = sum_i x_i rho(b_i).
inline Matrix rep_apply(const Representation& r, const Vector& x) {
  if (x.dim() != r.parent->dim) throw usage_error("rep_apply: dimension mismatch");
  Matrix out(r.vdim, r.vdim);
  for (size_t i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero()) out += r.matrices[i].scaled(x[i]);
  return out;
}

inline CycNum char_apply(const Character& c, const Vector& x) {
  if (x.dim() != c.parent->dim) throw usage_error("char_apply: dimension mismatch");
  CycNum out;
  for (size_t i = 0; i < x.dim(); ++i) out += c.values[i] * x[i];
  return out;
}

/// Verify the algebra-map conditions exactly and wrap the result:
/// rho(1) = I and rho(b_i) rho(b_j) = sum_k mult[i][j][k] rho(b_k).
inline Representation check_representation(std::shared_ptr<const HopfAlgebra> parent, std::vector<Matrix> matrices) {
  const HopfAlgebra& h = *parent;
  if (matrices.size() != h.dim) throw usage_error("representation needs one matrix per basis element");
  unsigned vdim = static_cast<unsigned>(matrices.empty() ? 0 : matrices[0].rows());
  if (vdim == 0) throw usage_error("representation dimension must be positive");
  for (const auto& m : matrices)
    if (m.rows() != vdim || m.cols() != vdim) throw usage_error("representation matrices must be square and equal-sized");

  Representation rho{std::move(parent), vdim, std::move(matrices)};
  if (rep_apply(rho, h.unit) != Matrix::identity(vdim)) throw math_error("representation: rho(1) != I");
  for (unsigned i = 0; i < h.dim; ++i)
    for (unsigned j = 0; j < h.dim; ++j)
      if (rho.matrices[i] * rho.matrices[j] != rep_apply(rho, h.mult[i][j]))
        throw math_error("representation: algebra-map condition fails at (" + h.name_of(i) + ", " + h.name_of(j) + ")");
  return rho;
}

inline Character character(const Representation& r) {
  Vector values(r.parent->dim);
  for (size_t i = 0; i < r.parent->dim; ++i) values[i] = trace(r.matrices[i]);
  return Character{r.parent, std::move(values)};
}

/// The twisting functor F_tau: same space, action precomposed with tau.
inline Representation twist(const Representation& r, const HopfAutomorphism& tau) {
  const HopfAlgebra& h = *r.parent;
  std::vector<Matrix> mats(h.dim);
  for (unsigned i = 0; i < h.dim; ++i) mats[i] = rep_apply(r, tau.matrix.col(i));
  return Representation{r.parent, r.vdim, std::move(mats)};
}

/// Dual module through the antipode: rho*(b_i) = rho(S(b_i))^t.
inline Representation dual(const Representation& r) {
  const HopfAlgebra& h = *r.parent;
  std::vector<Matrix> mats(h.dim);
  for (unsigned i = 0; i < h.dim; ++i) mats[i] = transpose(rep_apply(r, h.antipode.col(i)));
  return Representation{r.parent, r.vdim, std::move(mats)};
}

/// Twisted dual through the anti-involution T = tau S (requires tau^2 = Id).
inline Representation twisted_dual(const Representation& r, const HopfAutomorphism& tau) {
  if (tau.order > 2) throw usage_error("twisted_dual: automorphism order must divide 2");
  const HopfAlgebra& h = *r.parent;
  Matrix t = tau.matrix * h.antipode;
  std::vector<Matrix> mats(h.dim);
  for (unsigned i = 0; i < h.dim; ++i) mats[i] = transpose(rep_apply(r, t.col(i)));
  return Representation{r.parent, r.vdim, std::move(mats)};
}

inline Representation tensor_product(const Representation& a, const Representation& b) {
  require_same_parent(a, b);
  const HopfAlgebra& h = *a.parent;
  std::vector<Matrix> mats(h.dim, Matrix(a.vdim * b.vdim, a.vdim * b.vdim));
  for (unsigned i = 0; i < h.dim; ++i)
    for (const auto& [key, c] : h.comult[i].terms())
      mats[i] += kron(a.matrices[key[0]], b.matrices[key[1]]).scaled(c);
  return Representation{a.parent, a.vdim * b.vdim, std::move(mats)};
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_parent(a, b);
  const HopfAlgebra& h = *a.parent;
  unsigned n = a.vdim + b.vdim;
  std::vector<Matrix> mats(h.dim, Matrix(n, n));
  for (unsigned i = 0; i < h.dim; ++i) {
    for (size_t p = 0; p < a.vdim; ++p)
      for (size_t q = 0; q < a.vdim; ++q) mats[i](p, q) = a.matrices[i](p, q);
    for (size_t p = 0; p < b.vdim; ++p)
      for (size_t q = 0; q < b.vdim; ++q) mats[i](a.vdim + p, a.vdim + q) = b.matrices[i](p, q);
  }
  return Representation{a.parent, n, std::move(mats)};
}

/// Left regular representation: b_i acting by left multiplication on H.
inline Representation regular_representation(std::shared_ptr<const HopfAlgebra> parent) {
  const HopfAlgebra& h = *parent;
  std::vector<Matrix> mats(h.dim, Matrix(h.dim, h.dim));
  for (unsigned i = 0; i < h.dim; ++i)
    for (unsigned k = 0; k < h.dim; ++k)
      for (unsigned j = 0; j < h.dim; ++j) mats[i](j, k) = h.mult[i][k][j];
  return check_representation(std::move(parent), std::move(mats));
}

namespace detail {

// rho(tau^s(b_j)) for s < m, j < dim, materialized once per call site.
inline std::vector<std::vector<Matrix>> twisted_families(const Representation& r, const HopfAutomorphism& tau,
                                                         unsigned m) {
  const HopfAlgebra& h = *r.parent;
  std::vector<std::vector<Matrix>> fam(m, std::vector<Matrix>(h.dim));
  Matrix power = Matrix::identity(h.dim);
  for (unsigned s = 0; s < m; ++s) {
    for (unsigned j = 0; j < h.dim; ++j) fam[s][j] = rep_apply(r, power.col(j));
    if (s + 1 < m) power = power * tau.matrix;
  }
  return fam;
}

}  // namespace detail

/// The action of a single element x on V^(x)m twisted slotwise by powers of
/// tau. Materializes only the one matrix it needs, never the full family.
inline Matrix twisted_power_action(const Representation& r, const HopfAutomorphism& tau, unsigned m, const Vector& x) {
  if (m < 1) throw usage_error("twisted_power_action: m must be >= 1");
  if (m % tau.order != 0) throw usage_error("twisted power module needs the order of tau to divide m");
  auto fam = detail::twisted_families(r, tau, m);
  size_t n = 1;
  for (unsigned s = 0; s < m; ++s) n *= r.vdim;
  Matrix out(n, n);
  const SparseTensor expansion = iterated_comult(*r.parent, x, m);
  for (const auto& [key, c] : expansion.terms()) {
    Matrix factor = fam[0][key[0]];
    for (unsigned s = 1; s < m; ++s) factor = kron(factor, fam[s][key[s]]);
    out += factor.scaled(c);
  }
  return out;
}

/// The twisted tensor power module on V^(x)m with action
/// rho(h_1) (x) rho(tau(h_2)) (x) ... (x) rho(tau^{m-1}(h_m)).
inline Representation twisted_power_module(const Representation& r, const HopfAutomorphism& tau, unsigned m) {
  if (m < 1) throw usage_error("twisted_power_module: m must be >= 1");
  if (m % tau.order != 0) throw usage_error("twisted power module needs the order of tau to divide m");
  const HopfAlgebra& h = *r.parent;
  std::vector<Matrix> mats(h.dim);
  for (unsigned i = 0; i < h.dim; ++i) mats[i] = twisted_power_action(r, tau, m, basis_vector(h, i));
  return check_representation(r.parent, std::move(mats));
}

/// The cyclic shift v_1 (x) ... (x) v_m -> v_2 (x) ... (x) v_m (x) v_1 as a
/// permutation matrix on V^(x)m, indices composed row-major (first slot most
/// significant), matching the kron convention.
inline Matrix cyclic_shift_matrix(unsigned vdim, unsigned m) {
  size_t n = 1;
  for (unsigned s = 0; s < m; ++s) n *= vdim;
  Matrix alpha(n, n);
  for (size_t idx = 0; idx < n; ++idx) {
    // Decode (i_1, ..., i_m), rotate left, re-encode.
    std::vector<size_t> tuple(m);
    size_t rest = idx;
    for (unsigned s = m; s-- > 0;) {
      tuple[s] = rest % vdim;
      rest /= vdim;
    }
    size_t target = 0;
    for (unsigned s = 0; s < m; ++s) target = target * vdim + tuple[(s + 1) % m];
    alpha(target, idx) = CycNum(1);
  }
  return alpha;
}

/// Basis of the invariant subspace V^H = image of rho(Lambda). The
/// projection property rho(Lambda)^2 = rho(Lambda) and the invariance of
/// every returned vector are checked exactly.
inline std::vector<Vector> invariants(const Representation& r) {
  const HopfAlgebra& h = *r.parent;
  Matrix p = rep_apply(r, integral_of(h));
  if (p * p != p) throw math_error("invariants: rho(Lambda) is not idempotent");
  auto [red, pivots] = rref(p);
  std::vector<Vector> basis;
  basis.reserve(pivots.size());
  for (size_t c : pivots) basis.push_back(p.col(c));
  for (const auto& v : basis)
    for (unsigned i = 0; i < h.dim; ++i)
      if (r.matrices[i].apply(v) != v.scaled(h.counit[i]))
        throw math_error("invariants: basis vector is not invariant under " + h.name_of(i));
  return basis;
}

/// Exact basis of the intertwiner space
///   Hom_H(from, to) = { X : to(b_i) X = X from(b_i) for all i },
/// computed as the nullspace of the vectorized equations. X is read
/// row-major: vec(X)_{p*cols + q} = X(p, q).
inline std::vector<Matrix> hom_space(const Representation& from, const Representation& to) {
  require_same_parent(from, to);
  const HopfAlgebra& h = *from.parent;
  const size_t rows = to.vdim, cols = from.vdim, n = rows * cols;
  Matrix big(h.dim * n, n);
  for (unsigned i = 0; i < h.dim; ++i) {
    Matrix block = kron(to.matrices[i], Matrix::identity(cols)) -
                   kron(Matrix::identity(rows), transpose(from.matrices[i]));
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) big(i * n + p, q) = block(p, q);
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(big)) {
    Matrix x(rows, cols);
    for (size_t p = 0; p < rows; ++p)
      for (size_t q = 0; q < cols; ++q) x(p, q) = v[p * cols + q];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// End-dimension criterion: the endomorphism algebra over Q(zeta_N) is
/// one-dimensional. This is the working substitute for irreducibility over
/// an algebraically closed field.
inline bool is_absolutely_irreducible(const Representation& r) { return hom_space(r, r).size() == 1; }

}  // namespace hopfind

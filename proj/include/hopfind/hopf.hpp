#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/linalg.hpp"
#include "hopfind/sparse_tensor.hpp"

namespace hopfind {

/// A finite-dimensional Hopf algebra over Q(zeta_N), given by structure
/// constants in a fixed basis b_0, ..., b_{d-1}:
///   mult[i][j]  coordinates of b_i * b_j
///   unit        coordinates of 1
///   comult[i]   Delta(b_i) as a sparse arity-2 tensor
///   counit[i]   epsilon(b_i)
///   antipode    matrix of S (column j = coordinates of S(b_j))
/// `integral` caches the normalized two-sided integral; it is filled by
/// finalize() and never trusted from input.
struct HopfAlgebra {
  unsigned dim = 0;
  unsigned conductor = 1;
  std::vector<std::string> basis_names;
  std::vector<std::vector<Vector>> mult;
  Vector unit;
  std::vector<SparseTensor> comult;
  Vector counit;
  Matrix antipode;
  std::optional<Vector> integral;

  std::string name_of(size_t i) const {
    if (i < basis_names.size() && !basis_names[i].empty()) return basis_names[i];
    return "b" + std::to_string(i);
  }
};

inline void check_well_formed(const HopfAlgebra& h) {
  if (h.dim == 0) throw usage_error("algebra dimension must be positive");
  if (h.mult.size() != h.dim) throw usage_error("mult table must have dim rows");
  for (const auto& row : h.mult) {
    if (row.size() != h.dim) throw usage_error("mult table must be dim x dim");
    for (const auto& v : row)
      if (v.dim() != h.dim) throw usage_error("mult table entries must be coordinate vectors of length dim");
  }
  if (h.unit.dim() != h.dim) throw usage_error("unit must be a coordinate vector of length dim");
  if (h.comult.size() != h.dim) throw usage_error("comult must list one tensor per basis element");
  for (const auto& t : h.comult)
    if (t.arity() != 2 || t.dim() != h.dim) throw usage_error("comult entries must be arity-2 tensors over the basis");
  if (h.counit.dim() != h.dim) throw usage_error("counit must have one value per basis element");
  if (h.antipode.rows() != h.dim || h.antipode.cols() != h.dim)
    throw usage_error("antipode must be a dim x dim matrix");
}

inline Vector basis_vector(const HopfAlgebra& h, size_t i) { return Vector::unit(h.dim, i); }

/// Bilinear extension of the multiplication table.
inline Vector multiply(const HopfAlgebra& h, const Vector& x, const Vector& y) {
  if (x.dim() != h.dim || y.dim() != h.dim) throw usage_error("multiply: dimension mismatch");
  Vector out(h.dim);
  for (size_t i = 0; i < h.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < h.dim; ++j) {
      if (y[j].is_zero()) continue;
      out += h.mult[i][j].scaled(x[i] * y[j]);
    }
  }
  return out;
}

inline Vector apply_antipode(const HopfAlgebra& h, const Vector& x) {
  if (x.dim() != h.dim) throw usage_error("apply_antipode: dimension mismatch");
  return h.antipode.apply(x);
}

inline CycNum apply_counit(const HopfAlgebra& h, const Vector& x) {
  if (x.dim() != h.dim) throw usage_error("apply_counit: dimension mismatch");
  CycNum out;
  for (size_t i = 0; i < h.dim; ++i) out += h.counit[i] * x[i];
  return out;
}

/// Delta extended linearly to an arbitrary element.
inline SparseTensor comult_of_vector(const HopfAlgebra& h, const Vector& x) {
  SparseTensor t(2, h.dim);
  for (unsigned i = 0; i < h.dim; ++i)
    if (!x[i].is_zero()) t.add_tensor(h.comult[i].scaled(x[i]));
  return t;
}

/// Replace one tensor slot by its comultiplication, raising the arity by one.
inline SparseTensor comult_slot(const HopfAlgebra& h, const SparseTensor& t, unsigned slot) {
  if (slot >= t.arity()) throw usage_error("comult_slot: slot out of range");
  SparseTensor out(t.arity() + 1, t.dim());
  for (const auto& [key, c] : t.terms()) {
    for (const auto& [dk, dc] : h.comult[key[slot]].terms()) {
      SparseTensor::Key nk;
      nk.reserve(key.size() + 1);
      nk.insert(nk.end(), key.begin(), key.begin() + slot);
      nk.push_back(dk[0]);
      nk.push_back(dk[1]);
      nk.insert(nk.end(), key.begin() + slot + 1, key.end());
      out.add(nk, c * dc);
    }
  }
  return out;
}

/// Slot-wise product of two elements of H^(x)m.
inline SparseTensor tensor_pointwise_product(const HopfAlgebra& h, const SparseTensor& a, const SparseTensor& b) {
  if (a.arity() != b.arity() || a.dim() != b.dim()) throw usage_error("tensor product: shape mismatch");
  SparseTensor out(a.arity(), a.dim());
  std::vector<Vector> factors(a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      for (unsigned s = 0; s < a.arity(); ++s) factors[s] = multiply(h, basis_vector(h, ka[s]), basis_vector(h, kb[s]));
      // Expand the product of slot factors into basis tuples.
      SparseTensor partial(1, a.dim());
      partial.add_tensor(SparseTensor::from_vector(factors[0]).scaled(ca * cb));
      for (unsigned s = 1; s < a.arity(); ++s) {
        SparseTensor next(s + 1, a.dim());
        for (const auto& [pk, pc] : partial.terms()) {
          for (unsigned q = 0; q < a.dim(); ++q) {
            if (factors[s][q].is_zero()) continue;
            SparseTensor::Key nk = pk;
            nk.push_back(q);
            next.add(nk, pc * factors[s][q]);
          }
        }
        partial = std::move(next);
      }
      out.add_tensor(partial);
    }
  }
  return out;
}

/// Contract one slot with the counit, lowering the arity by one (the arity-1
/// result of a full contraction is returned as a Vector by multiply_out).
inline SparseTensor counit_slot(const HopfAlgebra& h, const SparseTensor& t, unsigned slot) {
  if (t.arity() < 2) throw usage_error("counit_slot: arity must be >= 2");
  if (slot >= t.arity()) throw usage_error("counit_slot: slot out of range");
  SparseTensor out(t.arity() - 1, t.dim());
  for (const auto& [key, c] : t.terms()) {
    SparseTensor::Key nk;
    nk.reserve(key.size() - 1);
    for (unsigned s = 0; s < key.size(); ++s)
      if (s != slot) nk.push_back(key[s]);
    out.add(nk, c * h.counit[key[slot]]);
  }
  return out;
}

inline Vector tensor_as_vector(const HopfAlgebra& h, const SparseTensor& t) {
  if (t.arity() != 1) throw usage_error("tensor_as_vector: arity must be 1");
  Vector out(h.dim);
  for (const auto& [key, c] : t.terms()) out[key[0]] += c;
  return out;
}

/// Multiply all slots together left-to-right, collapsing H^(x)m to H.
inline Vector multiply_out(const HopfAlgebra& h, const SparseTensor& t) {
  Vector out(h.dim);
  for (const auto& [key, c] : t.terms()) {
    Vector prod = basis_vector(h, key[0]);
    for (size_t s = 1; s < key.size(); ++s) prod = multiply(h, prod, basis_vector(h, key[s]));
    out += prod.scaled(c);
  }
  return out;
}

/// Delta^{m-1}(x) as an arity-m tensor; m = 1 returns x itself. Expansion
/// applies Delta to the last slot repeatedly; by coassociativity the slot
/// choice does not matter (exercised by the property tests).
inline SparseTensor iterated_comult(const HopfAlgebra& h, const Vector& x, unsigned m) {
  if (m < 1) throw usage_error("iterated_comult: m must be >= 1");
  SparseTensor t = SparseTensor::from_vector(x);
  for (unsigned s = 1; s < m; ++s) t = comult_slot(h, t, t.arity() - 1);
  return t;
}

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  /// True when every structural axiom holds. "antipode-involutive" is
  /// informational (semisimple algebras satisfy it, but it is not part of
  /// well-formedness) and excluded here.
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed && c.name != "antipode-involutive") return false;
    return true;
  }

  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Verify the Hopf axioms on every basis element. Checks run in a fixed
/// order and each records the first witness that breaks it.
inline AxiomReport check_axioms(const HopfAlgebra& h) {
  check_well_formed(h);
  AxiomReport report;
  const unsigned d = h.dim;

  auto add_check = [&](const std::string& name, bool ok, const std::string& witness) {
    report.checks.push_back({name, ok, ok ? "" : witness});
  };

  {
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < d && ok; ++i)
      for (unsigned j = 0; j < d && ok; ++j)
        for (unsigned k = 0; k < d && ok; ++k) {
          Vector left = multiply(h, h.mult[i][j], basis_vector(h, k));
          Vector right = multiply(h, basis_vector(h, i), h.mult[j][k]);
          if (left != right) {
            ok = false;
            witness = "(" + h.name_of(i) + ", " + h.name_of(j) + ", " + h.name_of(k) + ")";
          }
        }
    add_check("associativity", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < d && ok; ++i) {
      Vector b = basis_vector(h, i);
      if (multiply(h, h.unit, b) != b || multiply(h, b, h.unit) != b) {
        ok = false;
        witness = h.name_of(i);
      }
    }
    add_check("unit", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < d && ok; ++i)
      if (comult_slot(h, h.comult[i], 0) != comult_slot(h, h.comult[i], 1)) {
        ok = false;
        witness = h.name_of(i);
      }
    add_check("coassociativity", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < d && ok; ++i) {
      Vector b = basis_vector(h, i);
      Vector left = tensor_as_vector(h, counit_slot(h, h.comult[i], 0));
      Vector right = tensor_as_vector(h, counit_slot(h, h.comult[i], 1));
      if (left != b || right != b) {
        ok = false;
        witness = h.name_of(i);
      }
    }
    add_check("counit", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    SparseTensor unit2(2, d);
    const SparseTensor unit1 = SparseTensor::from_vector(h.unit);
    for (const auto& [key, c] : unit1.terms())
      for (const auto& [key2, c2] : unit1.terms()) unit2.add({key[0], key2[0]}, c * c2);
    if (comult_of_vector(h, h.unit) != unit2) {
      ok = false;
      witness = "Delta(1) != 1 (x) 1";
    }
    for (unsigned i = 0; i < d && ok; ++i)
      for (unsigned j = 0; j < d && ok; ++j) {
        SparseTensor lhs = comult_of_vector(h, h.mult[i][j]);
        SparseTensor rhs = tensor_pointwise_product(h, h.comult[i], h.comult[j]);
        if (lhs != rhs) {
          ok = false;
          witness = "(" + h.name_of(i) + ", " + h.name_of(j) + ")";
        }
      }
    add_check("comult-multiplicative", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    if (apply_counit(h, h.unit) != CycNum(1)) {
      ok = false;
      witness = "epsilon(1) != 1";
    }
    for (unsigned i = 0; i < d && ok; ++i)
      for (unsigned j = 0; j < d && ok; ++j)
        if (apply_counit(h, h.mult[i][j]) != h.counit[i] * h.counit[j]) {
          ok = false;
          witness = "(" + h.name_of(i) + ", " + h.name_of(j) + ")";
        }
    add_check("counit-multiplicative", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < d && ok; ++i) {
      Vector left(h.dim), right(h.dim);
      for (const auto& [key, c] : h.comult[i].terms()) {
        left += multiply(h, apply_antipode(h, basis_vector(h, key[0])), basis_vector(h, key[1])).scaled(c);
        right += multiply(h, basis_vector(h, key[0]), apply_antipode(h, basis_vector(h, key[1]))).scaled(c);
      }
      Vector expect = h.unit.scaled(h.counit[i]);
      if (left != expect || right != expect) {
        ok = false;
        witness = h.name_of(i);
      }
    }
    add_check("antipode", ok, witness);
  }

  {
    bool ok = h.antipode * h.antipode == Matrix::identity(d);
    add_check("antipode-involutive", ok, ok ? "" : "S^2 != Id");
  }

  return report;
}

/// The normalized two-sided integral: the unique Lambda with
/// b_i Lambda = epsilon(b_i) Lambda = Lambda b_i and epsilon(Lambda) = 1.
/// Computed as the nullspace of the stacked left/right conditions; a cached
/// or user-supplied integral is never consulted.
inline Vector compute_integral(const HopfAlgebra& h) {
  const unsigned d = h.dim;
  Matrix conditions(2 * d * d, d);
  size_t row = 0;
  for (unsigned i = 0; i < d; ++i) {
    // Left multiplication by b_i minus epsilon(b_i), then the right version.
    for (unsigned j = 0; j < d; ++j, ++row)
      for (unsigned k = 0; k < d; ++k) {
        conditions(row, k) = h.mult[i][k][j];
        if (j == k) conditions(row, k) -= h.counit[i];
      }
    for (unsigned j = 0; j < d; ++j, ++row)
      for (unsigned k = 0; k < d; ++k) {
        conditions(row, k) = h.mult[k][i][j];
        if (j == k) conditions(row, k) -= h.counit[i];
      }
  }
  auto basis = nullspace(conditions);
  if (basis.size() != 1)
    throw math_error("integral: space of two-sided integrals has dimension " + std::to_string(basis.size()) +
                     ", expected 1");
  CycNum eps = apply_counit(h, basis[0]);
  if (eps.is_zero()) throw math_error("integral: counit vanishes on the integral space (not semisimple)");
  return basis[0].scaled(eps.inv());
}

/// Run the axiom checks, compute the integral, and cache it. A supplied
/// integral is verified against the computed one and rejected on mismatch.
inline void finalize(HopfAlgebra& h) {
  AxiomReport report = check_axioms(h);
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.passed && c.name != "antipode-involutive")
        throw math_error("axiom '" + c.name + "' fails at " + c.witness);
  }
  Vector lambda = compute_integral(h);
  if (h.integral && *h.integral != lambda)
    throw math_error("supplied integral does not match the computed normalized integral");
  h.integral = lambda;
}

inline const Vector& integral_of(const HopfAlgebra& h) {
  if (!h.integral) throw usage_error("algebra has no cached integral; finalize() it first");
  return *h.integral;
}

/// A verified Hopf algebra automorphism: the matrix of tau on the basis
/// together with its (finite) order.
struct HopfAutomorphism {
  Matrix matrix;
  unsigned order = 1;
};

inline constexpr unsigned kDefaultOrderCap = 64;

inline Vector apply_automorphism(const HopfAutomorphism& t, const Vector& x) { return t.matrix.apply(x); }

/// Validate that M is a bialgebra automorphism and measure its order.
/// Also asserts the two consequences the theory guarantees for genuine
/// automorphisms: M commutes with the antipode and fixes the integral.
inline HopfAutomorphism check_automorphism(const HopfAlgebra& h, const Matrix& m,
                                           unsigned order_cap = kDefaultOrderCap) {
  const unsigned d = h.dim;
  if (m.rows() != d || m.cols() != d) throw usage_error("automorphism: matrix must be dim x dim");
  if (rank(m) != d) throw math_error("automorphism: matrix is not invertible");

  if (m.apply(h.unit) != h.unit) throw math_error("automorphism: tau(1) != 1");
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      Vector lhs = multiply(h, m.col(i), m.col(j));
      Vector rhs = m.apply(h.mult[i][j]);
      if (lhs != rhs)
        throw math_error("automorphism: algebra morphism fails at (" + h.name_of(i) + ", " + h.name_of(j) + ")");
    }
  for (unsigned i = 0; i < d; ++i) {
    SparseTensor lhs = comult_of_vector(h, m.col(i));
    SparseTensor rhs = h.comult[i].apply_matrix_to_slot(0, m).apply_matrix_to_slot(1, m);
    if (lhs != rhs) throw math_error("automorphism: coalgebra morphism fails at " + h.name_of(i));
  }
  for (unsigned i = 0; i < d; ++i)
    if (apply_counit(h, m.col(i)) != h.counit[i])
      throw math_error("automorphism: counit is not preserved at " + h.name_of(i));

  if (m * h.antipode != h.antipode * m)
    throw math_error("automorphism: does not commute with the antipode (inconsistent input)");
  if (h.integral && m.apply(*h.integral) != *h.integral)
    throw math_error("automorphism: does not fix the integral (inconsistent input)");

  Matrix power = m;
  unsigned order = 1;
  const Matrix id = Matrix::identity(d);
  while (power != id) {
    power = power * m;
    ++order;
    if (order > order_cap)
      throw math_error("automorphism: order exceeds the cap of " + std::to_string(order_cap));
  }
  return HopfAutomorphism{m, order};
}

/// sigma then tau, i.e. the map h -> sigma(tau(h)).
inline HopfAutomorphism compose(const HopfAlgebra& h, const HopfAutomorphism& sigma, const HopfAutomorphism& tau,
                                unsigned order_cap = kDefaultOrderCap) {
  return check_automorphism(h, sigma.matrix * tau.matrix, order_cap);
}

/// sum Lambda_1 (x) tau(Lambda_2) (x) ... (x) tau^{m-1}(Lambda_m):
/// the iterated comultiplication of the integral with tau^s applied to
/// slot s. Defined only when the order of tau divides m.
inline SparseTensor twisted_sweedler_tensor(const HopfAlgebra& h, const HopfAutomorphism& tau, unsigned m) {
  if (m < 1) throw usage_error("twisted_sweedler_tensor: m must be >= 1");
  if (m % tau.order != 0)
    throw usage_error("twisted indicators are only defined for m divisible by the order of the automorphism (order " +
                      std::to_string(tau.order) + ", m " + std::to_string(m) + ")");
  SparseTensor t = iterated_comult(h, integral_of(h), m);
  Matrix power = tau.matrix;
  for (unsigned s = 1; s < m; ++s) {
    t = t.apply_matrix_to_slot(s, power);
    if (s + 1 < m) power = power * tau.matrix;
  }
  return t;
}

}  // namespace hopfind

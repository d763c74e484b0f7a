#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/reps.hpp"
#include "hopfind/textformat.hpp"

namespace hopfind {

enum class IndicatorMethod { definition, rep_trace, invariant_trace, omega_trace };

inline const char* method_name(IndicatorMethod m) {
  switch (m) {
    case IndicatorMethod::definition: return "definition";
    case IndicatorMethod::rep_trace: return "rep_trace";
    case IndicatorMethod::invariant_trace: return "invariant_trace";
    case IndicatorMethod::omega_trace: return "omega_trace";
  }
  return "?";
}

/// One computed twisted indicator nu_m(chi, tau), tagged with the route that
/// produced it. `integrality` holds the integer coordinates of the value in
/// Z[zeta_m] once certify_integrality has run.
struct IndicatorResult {
  CycNum value;
  unsigned m = 1;
  IndicatorMethod method = IndicatorMethod::definition;
  std::optional<std::vector<Integer>> integrality;
};

struct NamedModule {
  std::string name;
  Representation rep;
};

struct NamedAutomorphism {
  std::string name;
  HopfAutomorphism aut;
};

inline void require_parent(const HopfAlgebra& h, const std::shared_ptr<const HopfAlgebra>& parent,
                           const char* what) {
  if (parent.get() == &h) return;
  if (!parent || parent->dim != h.dim || parent->conductor != h.conductor)
    throw usage_error(std::string(what) + ": parent algebra mismatch");
}

/// Route 1, the defining character sum:
///   nu_m(chi, tau) = sum_(Lambda) chi(Lambda_1 tau(Lambda_2) ... tau^{m-1}(Lambda_m)).
/// Contracts the twisted Sweedler tensor term by term with left-to-right
/// multiplication; no dense element of H^(x)m is ever built.
inline IndicatorResult nu_definition(const HopfAlgebra& h, const Character& chi, const HopfAutomorphism& tau,
                                     unsigned m) {
  require_parent(h, chi.parent, "nu_definition");
  SparseTensor t = twisted_sweedler_tensor(h, tau, m);
  return {char_apply(chi, multiply_out(h, t)), m, IndicatorMethod::definition, std::nullopt};
}

/// Route 2, the endomorphism trace on the full tensor power:
///   nu_m = tr_{V^(x)m}( alpha o rho~^m(Lambda) ).
inline IndicatorResult nu_rep_trace(const HopfAlgebra& h, const Representation& rho, const HopfAutomorphism& tau,
                                    unsigned m) {
  require_parent(h, rho.parent, "nu_rep_trace");
  Matrix action = twisted_power_action(rho, tau, m, integral_of(h));
  Matrix alpha = cyclic_shift_matrix(rho.vdim, m);
  return {trace(alpha * action), m, IndicatorMethod::rep_trace, std::nullopt};
}

/// Route 3, the trace of alpha restricted to the invariant subspace of the
/// twisted power module. The restriction must exist (alpha preserves the
/// invariants) and must have order dividing m; both are checked.
inline IndicatorResult nu_invariant_trace(const HopfAlgebra& h, const Representation& rho,
                                          const HopfAutomorphism& tau, unsigned m) {
  require_parent(h, rho.parent, "nu_invariant_trace");
  Representation power = twisted_power_module(rho, tau, m);
  std::vector<Vector> basis = invariants(power);
  if (basis.empty()) return {CycNum(0), m, IndicatorMethod::invariant_trace, std::nullopt};
  Matrix b = mat_from_cols(basis);
  Matrix alpha = cyclic_shift_matrix(rho.vdim, m);
  auto restricted = solve(b, alpha * b);
  if (!restricted)
    throw math_error("nu_invariant_trace: the cyclic shift does not preserve the invariant subspace");
  Matrix c = *restricted;
  Matrix ck = Matrix::identity(c.rows());
  for (unsigned s = 0; s < m; ++s) ck = ck * c;
  if (ck != Matrix::identity(c.rows()))
    throw math_error("nu_invariant_trace: restricted cyclic map does not have order dividing m");
  return {trace(c), m, IndicatorMethod::invariant_trace, std::nullopt};
}

/// Fill the Z[zeta_m] certificate. The value is re-embedded into
/// Q(zeta_lcm(N,m)) when m does not divide its conductor; the theory
/// guarantees membership, so a failure here signals a computational error.
inline IndicatorResult certify_integrality(IndicatorResult r) {
  unsigned target = std::lcm(r.value.conductor(), r.m);
  CycNum lifted = r.value.embed(target);
  auto cert = lifted.in_subring_z_zeta(r.m);
  if (!cert)
    throw math_error("certify_integrality: value " + to_string(r.value) + " is not in Z[zeta_" +
                     std::to_string(r.m) + "]");
  r.integrality = std::move(*cert);
  return r;
}

/// Trichotomy data for the second twisted indicator of an irreducible:
/// indicator 0 iff V is not isomorphic to its twisted dual, otherwise +-1
/// according to the parity of the (unique up to scale) intertwiner.
struct DualityClass {
  int indicator = 0;
  bool selfdual = false;
  enum class Parity { none, symmetric, skew } parity = Parity::none;
  std::optional<Matrix> intertwiner;
};

inline const char* parity_name(DualityClass::Parity p) {
  switch (p) {
    case DualityClass::Parity::none: return "none";
    case DualityClass::Parity::symmetric: return "symmetric";
    case DualityClass::Parity::skew: return "skew";
  }
  return "?";
}

inline DualityClass duality_class(const HopfAlgebra& h, const Representation& rho, const HopfAutomorphism& tau) {
  require_parent(h, rho.parent, "duality_class");
  if (tau.order > 2) throw usage_error("duality_class: automorphism order must divide 2");
  if (!is_absolutely_irreducible(rho)) throw usage_error("duality_class: module is not absolutely irreducible");

  auto hom = hom_space(twisted_dual(rho, tau), rho);
  DualityClass out;
  if (!hom.empty()) {
    if (hom.size() != 1)
      throw math_error("duality_class: intertwiner space has dimension " + std::to_string(hom.size()) +
                       " for an absolutely irreducible module");
    const Matrix& x = hom[0];
    out.selfdual = true;
    out.intertwiner = x;
    if (transpose(x) == x) {
      out.indicator = 1;
      out.parity = DualityClass::Parity::symmetric;
    } else if (transpose(x) == x.scaled(CycNum(-1))) {
      out.indicator = -1;
      out.parity = DualityClass::Parity::skew;
    } else {
      throw math_error("duality_class: intertwiner is neither symmetric nor skew");
    }
  }
  IndicatorResult nu = nu_definition(h, character(rho), tau, 2);
  if (nu.value != CycNum(out.indicator))
    throw crosscheck_error("duality_class: parity route gives " + std::to_string(out.indicator) +
                           " but the character sum gives " + to_string(nu.value));
  return out;
}

namespace detail {

inline Vector vec_of(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

inline size_t span_rank(const std::vector<Matrix>& mats) {
  if (mats.empty()) return 0;
  Matrix rows(mats.size(), mats[0].rows() * mats[0].cols());
  for (size_t k = 0; k < mats.size(); ++k) {
    Vector v = vec_of(mats[k]);
    for (size_t j = 0; j < v.dim(); ++j) rows(k, j) = v[j];
  }
  return rank(rows);
}

}  // namespace detail

/// Dimensions of the symmetric and skew parts of Hom_H(V-dagger, V) under
/// the transpose involution. Their difference is nu~_2(chi); their sum must
/// be the full Hom dimension.
inline std::pair<size_t, size_t> symalt_dims(const HopfAlgebra& h, const Representation& rho,
                                             const HopfAutomorphism& tau) {
  require_parent(h, rho.parent, "symalt_dims");
  if (tau.order > 2) throw usage_error("symalt_dims: automorphism order must divide 2");
  auto hom = hom_space(twisted_dual(rho, tau), rho);
  std::vector<Matrix> sym, alt;
  for (const auto& x : hom) {
    Matrix xt = transpose(x);
    Matrix s = x + xt, a = x - xt;
    if (!s.is_zero()) sym.push_back(std::move(s));
    if (!a.is_zero()) alt.push_back(std::move(a));
  }
  size_t ds = detail::span_rank(sym), da = detail::span_rank(alt);
  if (ds + da != hom.size())
    throw math_error("symalt_dims: transpose does not split the intertwiner space");
  return {ds, da};
}

/// The linear map Omega^tau_m(h) = sum_(h) S(tau^{m-1}(h_1) ... tau(h_{m-1}))
/// with (h_1, ..., h_{m-1}) the Sweedler components of Delta^{m-2}(h). For
/// m = 2 this degenerates to Omega(h) = S(tau(h)).
inline Matrix omega_map(const HopfAlgebra& h, const HopfAutomorphism& tau, unsigned m) {
  if (m < 2) throw usage_error("omega_map: m must be >= 2");
  if (m % tau.order != 0)
    throw usage_error("twisted indicators are only defined for m divisible by the order of the automorphism (order " +
                      std::to_string(tau.order) + ", m " + std::to_string(m) + ")");
  std::vector<Matrix> pow(m);
  pow[0] = Matrix::identity(h.dim);
  for (unsigned s = 1; s < m; ++s) pow[s] = pow[s - 1] * tau.matrix;
  Matrix out(h.dim, h.dim);
  for (unsigned i = 0; i < h.dim; ++i) {
    SparseTensor t = iterated_comult(h, basis_vector(h, i), m - 1);
    Vector acc(h.dim);
    for (const auto& [key, c] : t.terms()) {
      Vector prod = pow[m - 1].col(key[0]);
      for (unsigned s = 1; s < m - 1; ++s) prod = multiply(h, prod, pow[m - 1 - s].col(key[s]));
      acc += apply_antipode(h, prod).scaled(c);
    }
    for (unsigned j = 0; j < h.dim; ++j) out(j, i) = acc[j];
  }
  return out;
}

/// nu_m(chi_R) for the regular character as tr(Omega^tau_m), cross-checked
/// against the defining character sum.
inline IndicatorResult nu_regular(const HopfAlgebra& h, const HopfAutomorphism& tau, unsigned m) {
  CycNum value = trace(omega_map(h, tau, m));
  std::shared_ptr<const HopfAlgebra> alias(std::shared_ptr<const HopfAlgebra>(), &h);
  Character chi_r = character(regular_representation(alias));
  IndicatorResult via_def = nu_definition(h, chi_r, tau, m);
  if (via_def.value != value)
    throw crosscheck_error("nu_regular: tr(Omega) = " + to_string(value) + " but the character sum gives " +
                           to_string(via_def.value));
  return {value, m, IndicatorMethod::omega_trace, std::nullopt};
}

/// Gram matrix of the pairing (chi_i, chi_j) -> sum chi_i(Lambda_1) chi_j(S(Lambda_2)).
/// The identity matrix characterizes a complete irredundant set of
/// irreducible characters.
inline Matrix orthogonality_check(const HopfAlgebra& h, const std::vector<Character>& chars) {
  for (const auto& c : chars) require_parent(h, c.parent, "orthogonality_check");
  SparseTensor t = iterated_comult(h, integral_of(h), 2);
  const size_t n = chars.size();
  Matrix gram(n, n);
  // chi_j(S(b_k)) tabulated once.
  std::vector<std::vector<CycNum>> schi(n, std::vector<CycNum>(h.dim));
  for (size_t j = 0; j < n; ++j)
    for (unsigned k = 0; k < h.dim; ++k) schi[j][k] = char_apply(chars[j], h.antipode.col(k));
  for (const auto& [key, c] : t.terms())
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) gram(i, j) += c * chars[i].values[key[0]] * schi[j][key[1]];
  return gram;
}

/// A rendered indicator table: rows are automorphisms, columns are modules,
/// one IndicatorResult per cell (definition-route value, certified).
struct IndicatorTable {
  unsigned m = 2;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<IndicatorResult>> cells;
  bool methods_agreed = true;
};

/// Compute nu_m for every (automorphism, module) pair. With cross-checking
/// on (the default), every cell is recomputed by the representation-trace
/// and invariant-trace routes and all three must agree exactly; any
/// disagreement aborts with a diagnostic naming the cell and both values.
inline IndicatorTable indicator_table(const HopfAlgebra& h, const std::vector<NamedModule>& modules,
                                      const std::vector<NamedAutomorphism>& autos, unsigned m,
                                      bool cross_check = true) {
  IndicatorTable table;
  table.m = m;
  for (const auto& a : autos) table.rows.push_back(a.name);
  for (const auto& mod : modules) table.cols.push_back(mod.name);
  for (const auto& a : autos) {
    std::vector<IndicatorResult> row;
    for (const auto& mod : modules) {
      IndicatorResult cell = nu_definition(h, character(mod.rep), a.aut, m);
      if (cross_check) {
        for (IndicatorResult other : {nu_rep_trace(h, mod.rep, a.aut, m), nu_invariant_trace(h, mod.rep, a.aut, m)}) {
          if (other.value != cell.value)
            throw crosscheck_error("indicator mismatch at (" + a.name + ", " + mod.name + "): definition gives " +
                                   to_string(cell.value) + " but " + method_name(other.method) + " gives " +
                                   to_string(other.value));
        }
      }
      row.push_back(certify_integrality(std::move(cell)));
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

/// Plain-text rendering with aligned columns.
inline std::string render_table_text(const IndicatorTable& table, bool approx = false) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"nu_" + std::to_string(table.m)};
  for (const auto& c : table.cols) header.push_back(c);
  cells.push_back(header);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> line{table.rows[r]};
    for (const auto& cell : table.cells[r]) {
      std::string s = to_string(cell.value);
      if (approx) s += " (~" + approx_string(cell.value) + ")";
      line.push_back(s);
    }
    cells.push_back(std::move(line));
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  std::string out;
  for (const auto& line : cells) {
    for (size_t j = 0; j < line.size(); ++j) {
      if (j) out += "  ";
      std::string pad(width[j] - line[j].size(), ' ');
      out += j == 0 ? line[j] + pad : pad + line[j];
    }
    out += "\n";
  }
  return out;
}

}  // namespace hopfind

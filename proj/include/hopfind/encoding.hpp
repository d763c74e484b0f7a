#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "hopfind/builtins.hpp"
#include "hopfind/cyclotomic.hpp"
#include "hopfind/errors.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/linalg.hpp"

namespace hopfind {

/// All emission goes through ordered JSON so that key order is canonical
/// and output round-trips byte-for-byte.
using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("JSON parse error: ") + e.what());
  }
}

inline Json cyc_to_json(const CycNum& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline CycNum cyc_from_json(const Json& j) {
  try {
    unsigned n = j.at("conductor").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CycNum::from_coeffs(n, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad cyclotomic value: ") + e.what());
  }
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (size_t i = 0; i < v.dim(); ++i) out.push_back(cyc_to_json(v[i]));
  return out;
}

inline Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw usage_error("expected an array of cyclotomic values");
  std::vector<CycNum> entries;
  for (const auto& c : j) entries.push_back(cyc_from_json(c));
  return Vector(std::move(entries));
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(cyc_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw usage_error("expected a matrix as an array of rows");
  std::vector<std::vector<CycNum>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw usage_error("expected a matrix row to be an array");
    std::vector<CycNum> row;
    for (const auto& c : r) row.push_back(cyc_from_json(c));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(std::move(rows));
}

inline Json sparse2_to_json(const SparseTensor& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) out.push_back(Json::array({key[0], key[1], cyc_to_json(c)}));
  return out;
}

inline SparseTensor sparse2_from_json(const Json& j, unsigned dim) {
  SparseTensor t(2, dim);
  if (!j.is_array()) throw usage_error("expected sparse terms as an array of [i, j, value] triples");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) throw usage_error("sparse term must be a [i, j, value] triple");
    try {
      t.add({term[0].get<unsigned>(), term[1].get<unsigned>()}, cyc_from_json(term[2]));
    } catch (const nlohmann::json::exception& e) {
      throw usage_error(std::string("bad sparse term: ") + e.what());
    }
  }
  return t;
}

/// Algebra file schema; finalization (axiom checks, integral) is the
/// caller's decision.
inline Json algebra_to_json(const HopfAlgebra& h) {
  Json mult = Json::array();
  for (const auto& row : h.mult) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(vector_to_json(v));
    mult.push_back(std::move(jrow));
  }
  Json comult = Json::array();
  for (const auto& t : h.comult) comult.push_back(sparse2_to_json(t));
  Json counit = Json::array();
  for (size_t i = 0; i < h.counit.dim(); ++i) counit.push_back(cyc_to_json(h.counit[i]));
  Json out{{"dim", h.dim},
           {"conductor", h.conductor},
           {"basis_names", h.basis_names},
           {"mult", std::move(mult)},
           {"unit", vector_to_json(h.unit)},
           {"comult", std::move(comult)},
           {"counit", std::move(counit)},
           {"antipode", matrix_to_json(h.antipode)}};
  if (h.integral) out["integral"] = vector_to_json(*h.integral);
  return out;
}

inline HopfAlgebra algebra_from_json(const Json& j) {
  HopfAlgebra h;
  try {
    h.dim = j.at("dim").get<unsigned>();
    h.conductor = j.at("conductor").get<unsigned>();
    if (j.contains("basis_names")) h.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    for (const auto& row : j.at("mult")) {
      std::vector<Vector> r;
      for (const auto& v : row) r.push_back(vector_from_json(v));
      h.mult.push_back(std::move(r));
    }
    h.unit = vector_from_json(j.at("unit"));
    for (const auto& t : j.at("comult")) h.comult.push_back(sparse2_from_json(t, h.dim));
    h.counit = vector_from_json(j.at("counit"));
    h.antipode = matrix_from_json(j.at("antipode"));
    if (j.contains("integral")) h.integral = vector_from_json(j.at("integral"));
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad algebra file: ") + e.what());
  }
  check_well_formed(h);
  return h;
}

struct ModuleFile {
  std::string algebra;
  unsigned vdim = 0;
  std::vector<Matrix> matrices;
};

inline Json module_to_json(const ModuleFile& m) {
  Json mats = Json::array();
  for (const auto& mat : m.matrices) mats.push_back(matrix_to_json(mat));
  return Json{{"algebra", m.algebra}, {"vdim", m.vdim}, {"matrices", std::move(mats)}};
}

inline ModuleFile module_from_json(const Json& j) {
  ModuleFile m;
  try {
    m.algebra = j.at("algebra").get<std::string>();
    m.vdim = j.at("vdim").get<unsigned>();
    for (const auto& mat : j.at("matrices")) m.matrices.push_back(matrix_from_json(mat));
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad module file: ") + e.what());
  }
  return m;
}

struct AutomorphismFile {
  std::string algebra;
  Matrix matrix;
};

inline Json automorphism_to_json(const AutomorphismFile& a) {
  return Json{{"algebra", a.algebra}, {"matrix", matrix_to_json(a.matrix)}};
}

inline AutomorphismFile automorphism_from_json(const Json& j) {
  AutomorphismFile a;
  try {
    a.algebra = j.at("algebra").get<std::string>();
    a.matrix = matrix_from_json(j.at("matrix"));
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad automorphism file: ") + e.what());
  }
  return a;
}

inline Json table_to_json(const IndicatorTable& t) {
  Json values = Json::array();
  for (const auto& row : t.cells) {
    Json jrow = Json::array();
    for (const auto& cell : row) jrow.push_back(cyc_to_json(cell.value));
    values.push_back(std::move(jrow));
  }
  return Json{{"rows", t.rows}, {"cols", t.cols}, {"values", std::move(values)}, {"methods_agreed", t.methods_agreed}};
}

/// Canonical emission: two-space indentation, '\n' terminated.
inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hopfind

// Command-line front end: load algebras, modules, and automorphisms from
// builtin: URIs or JSON files, run checks and indicator computations, and
// print the results as text or canonical JSON.
//
// Exit codes are a stable contract:
//   0  success
//   1  mathematical failure (axiom violation, non-semisimple, non-identity
//      orthogonality)
//   2  usage or input error (bad flags, unreadable/unparseable files,
//      violated preconditions such as the divisibility constraint)
//   3  cross-check disagreement between independent computation routes

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfind/hopfind.hpp"

using namespace hopfind;

namespace {

unsigned order_cap_from_env() {
  if (const char* env = std::getenv("HOPF_FS_MAX_ORDER")) {
    try {
      unsigned long v = std::stoul(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw usage_error("HOPF_FS_MAX_ORDER must be a positive integer");
  }
  return kDefaultOrderCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& src) { return src.rfind(kBuiltinPrefix, 0) == 0; }

AlgebraBundle load_builtin(const std::string& src) {
  std::string name = src.substr(std::string(kBuiltinPrefix).size());
  if (name == "h8") return h8();
  const std::string group_prefix = "group/";
  if (name.rfind(group_prefix, 0) == 0) return bundled_group(name.substr(group_prefix.size()));
  throw usage_error("unknown builtin '" + src + "' (try builtin:h8 or builtin:group/<name>)");
}

/// Load an algebra source. Builtins arrive fully verified; file algebras are
/// finalized here unless the caller wants the raw structure for `check`.
AlgebraBundle load_source(const std::string& src, bool do_finalize = true) {
  if (is_builtin(src)) return load_builtin(src);
  auto h = std::make_shared<HopfAlgebra>(algebra_from_json(parse_json_text(read_file(src))));
  if (do_finalize) finalize(*h);
  AlgebraBundle bundle;
  bundle.name = src;
  bundle.algebra = std::move(h);
  return bundle;
}

NamedModule resolve_module(const AlgebraBundle& bundle, const std::string& spec) {
  for (const auto& mod : bundle.modules)
    if (mod.name == spec) return mod;
  ModuleFile file = module_from_json(parse_json_text(read_file(spec)));
  Representation rep = check_representation(bundle.algebra, file.matrices);
  if (rep.vdim != file.vdim) throw usage_error("module file '" + spec + "': vdim does not match the matrices");
  return {spec, std::move(rep)};
}

NamedAutomorphism resolve_automorphism(const AlgebraBundle& bundle, const std::string& spec) {
  for (const auto& na : bundle.automorphisms)
    if (na.name == spec) return na;
  AutomorphismFile file = automorphism_from_json(parse_json_text(read_file(spec)));
  return {spec, check_automorphism(*bundle.algebra, file.matrix, order_cap_from_env())};
}

std::vector<NamedModule> resolve_modules(const AlgebraBundle& bundle, const std::vector<std::string>& specs) {
  if (specs.empty()) {
    if (bundle.modules.empty())
      throw usage_error("this algebra has no built-in modules; pass module files with --module");
    return bundle.modules;
  }
  std::vector<NamedModule> out;
  for (const auto& s : specs) out.push_back(resolve_module(bundle, s));
  return out;
}

std::vector<NamedAutomorphism> resolve_automorphisms(const AlgebraBundle& bundle,
                                                     const std::vector<std::string>& specs) {
  if (specs.empty()) {
    if (bundle.automorphisms.empty())
      throw usage_error("this algebra has no built-in automorphisms; pass automorphism files with --auto");
    return bundle.automorphisms;
  }
  std::vector<NamedAutomorphism> out;
  for (const auto& s : specs) out.push_back(resolve_automorphism(bundle, s));
  return out;
}

std::string value_string(const CycNum& v, bool approx) {
  std::string s = to_string(v);
  if (approx) s += " (~" + approx_string(v) + ")";
  return s;
}

struct Options {
  std::string source;
  std::vector<std::string> modules;
  std::vector<std::string> autos;
  unsigned m = 2;
  std::string format = "text";
  bool approx = false;
  bool no_cross_check = false;
  bool show_map = false;
  bool all = false;
};

int run_check(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source, /*do_finalize=*/false);
  AxiomReport report = check_axioms(*bundle.algebra);
  if (opt.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    Json out{{"source", opt.source}, {"checks", std::move(checks)}, {"all_passed", report.all_passed()}};
    std::cout << dump_canonical(out);
  } else {
    for (const auto& c : report.checks) {
      std::string line = c.name;
      line.resize(24, ' ');
      line += c.passed ? "ok" : "FAIL  witness: " + c.witness;
      std::cout << line << "\n";
    }
    std::cout << (report.all_passed() ? "all passed" : "FAILED") << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_integral(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source);
  const HopfAlgebra& h = *bundle.algebra;
  const Vector& lambda = integral_of(h);
  if (opt.format == "json") {
    Json out{{"source", opt.source}, {"basis", h.basis_names}, {"integral", vector_to_json(lambda)}};
    std::cout << dump_canonical(out);
  } else {
    for (unsigned i = 0; i < h.dim; ++i) {
      std::string name = h.name_of(i);
      name.resize(std::max<size_t>(name.size() + 2, 6), ' ');
      std::cout << name << value_string(lambda[i], opt.approx) << "\n";
    }
  }
  return 0;
}

int run_indicators(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source);
  auto modules = resolve_modules(bundle, opt.modules);
  auto autos = resolve_automorphisms(bundle, opt.autos);
  IndicatorTable table = indicator_table(*bundle.algebra, modules, autos, opt.m, !opt.no_cross_check);
  if (opt.format == "json") {
    std::cout << dump_canonical(table_to_json(table));
  } else if (table.rows.size() == 1 && table.cols.size() == 1) {
    std::cout << value_string(table.cells[0][0].value, opt.approx) << "\n";
  } else {
    std::cout << render_table_text(table, opt.approx);
  }
  return 0;
}

int run_regular(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source);
  if (opt.autos.size() != 1) throw usage_error("regular: exactly one --auto is required");
  NamedAutomorphism na = resolve_automorphism(bundle, opt.autos[0]);
  const HopfAlgebra& h = *bundle.algebra;
  IndicatorResult r = certify_integrality(nu_regular(h, na.aut, opt.m));
  Matrix omega = omega_map(h, na.aut, opt.m);
  if (opt.format == "json") {
    Json out{{"source", opt.source},
             {"automorphism", na.name},
             {"m", opt.m},
             {"value", cyc_to_json(r.value)}};
    if (opt.show_map) out["omega"] = matrix_to_json(omega);
    std::cout << dump_canonical(out);
  } else {
    std::cout << "nu_" << opt.m << "(chi_R, " << na.name << ") = " << value_string(r.value, opt.approx) << "\n";
    if (opt.show_map) {
      std::cout << "Omega^" << na.name << "_" << opt.m << ":\n";
      for (unsigned i = 0; i < h.dim; ++i) {
        std::string name = h.name_of(i);
        name.resize(std::max<size_t>(name.size() + 2, 6), ' ');
        std::cout << "  " << name << combo_string(h.basis_names, omega.col(i)) << "\n";
      }
    }
  }
  return 0;
}

int run_duality(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source);
  if (opt.modules.size() != 1 || opt.autos.size() != 1)
    throw usage_error("duality: exactly one --module and one --auto are required");
  NamedModule mod = resolve_module(bundle, opt.modules[0]);
  NamedAutomorphism na = resolve_automorphism(bundle, opt.autos[0]);
  DualityClass d = duality_class(*bundle.algebra, mod.rep, na.aut);
  if (opt.format == "json") {
    Json out{{"module", mod.name},
             {"automorphism", na.name},
             {"indicator", d.indicator},
             {"selfdual", d.selfdual},
             {"parity", parity_name(d.parity)},
             {"intertwiner", d.intertwiner ? matrix_to_json(*d.intertwiner) : Json(nullptr)}};
    std::cout << dump_canonical(out);
  } else {
    std::cout << "indicator: " << d.indicator << "\n";
    std::cout << "selfdual: " << (d.selfdual ? "yes" : "no") << "\n";
    std::cout << "parity: " << parity_name(d.parity) << "\n";
    if (d.intertwiner) std::cout << "intertwiner: " << to_string(*d.intertwiner) << "\n";
  }
  return 0;
}

int run_orthogonality(const Options& opt) {
  AlgebraBundle bundle = load_source(opt.source);
  auto modules = resolve_modules(bundle, opt.modules);
  std::vector<Character> chars;
  for (const auto& mod : modules) chars.push_back(character(mod.rep));
  Matrix gram = orthogonality_check(*bundle.algebra, chars);
  bool identity = gram == Matrix::identity(chars.size());
  if (opt.format == "json") {
    Json names = Json::array();
    for (const auto& mod : modules) names.push_back(mod.name);
    Json out{{"source", opt.source}, {"modules", std::move(names)}, {"gram", matrix_to_json(gram)},
             {"identity", identity}};
    std::cout << dump_canonical(out);
  } else {
    for (size_t i = 0; i < gram.rows(); ++i) {
      for (size_t j = 0; j < gram.cols(); ++j) std::cout << (j ? "  " : "") << to_string(gram(i, j));
      std::cout << "\n";
    }
    std::cout << "identity: " << (identity ? "yes" : "no") << "\n";
  }
  return identity ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted Frobenius-Schur indicators for structure-constant Hopf algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_m) {
    cmd->add_option("source", opt.source, "algebra: a JSON file path or a builtin: URI")->required();
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--approx", opt.approx, "append floating-point approximations to text output");
    if (with_m) cmd->add_option("--m", opt.m, "indicator order m")->check(CLI::PositiveNumber);
    return cmd;
  };

  CLI::App* c_check = add_common(app.add_subcommand("check", "verify the Hopf axioms"), false);
  CLI::App* c_integral = add_common(app.add_subcommand("integral", "print the normalized integral"), false);

  CLI::App* c_ind = add_common(app.add_subcommand("indicators", "compute an indicator table"), true);
  c_ind->add_option("--module", opt.modules, "module name or module file (repeatable; default: all built-ins)");
  c_ind->add_option("--auto", opt.autos, "automorphism name or file (repeatable; default: all built-ins)");
  c_ind->add_flag("--all", opt.all, "all built-in modules and automorphisms (the default when none are named)");
  c_ind->add_flag("--no-cross-check", opt.no_cross_check, "skip the independent-route cross-checks");

  CLI::App* c_reg = add_common(app.add_subcommand("regular", "indicator of the regular representation"), true);
  c_reg->add_option("--auto", opt.autos, "automorphism name or file")->required();
  c_reg->add_flag("--show-map", opt.show_map, "also print the Omega matrix in basis coordinates");

  CLI::App* c_dual = add_common(app.add_subcommand("duality", "twisted-dual trichotomy of an irreducible"), false);
  c_dual->add_option("--module", opt.modules, "module name or module file")->required();
  c_dual->add_option("--auto", opt.autos, "automorphism name or file")->required();

  CLI::App* c_orth = add_common(app.add_subcommand("orthogonality", "character pairing Gram matrix"), false);
  c_orth->add_option("--module", opt.modules, "module name or file (repeatable; default: all built-ins)");

  try {
    app.parse(argc, argv);
    order_cap_from_env();
    if (app.got_subcommand(c_check)) return run_check(opt);
    if (app.got_subcommand(c_integral)) return run_integral(opt);
    if (app.got_subcommand(c_ind)) return run_indicators(opt);
    if (app.got_subcommand(c_reg)) return run_regular(opt);
    if (app.got_subcommand(c_dual)) return run_duality(opt);
    if (app.got_subcommand(c_orth)) return run_orthogonality(opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const crosscheck_error& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

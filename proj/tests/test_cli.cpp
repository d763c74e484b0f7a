#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hopfind/builtins.hpp"
#include "hopfind/encoding.hpp"
#include "subprocess.hpp"

using namespace hopfind;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("check command") {
  CliResult ok = run_cli("check builtin:h8");
  CHECK(ok.exit_code == 0);
  CHECK(ok.contains("antipode"));
  CHECK(ok.contains("all passed"));

  CHECK(run_cli("check builtin:group/s3").exit_code == 0);

  // Zeroing the antipode in an otherwise valid file is a mathematical
  // failure with a printed witness, exit 1.
  Json j = algebra_to_json(*h8().algebra);
  j.erase("integral");
  j["antipode"] = matrix_to_json(Matrix(8, 8));
  auto bad = write_temp("hopfind_cli_bad_antipode.json", dump_canonical(j));
  CliResult broken = run_cli("check " + bad.string());
  CHECK(broken.exit_code == 1);
  CHECK(broken.contains("FAIL"));
  CHECK(broken.contains("witness"));

  auto garbage = write_temp("hopfind_cli_garbage.json", "{ this is not json");
  CHECK(run_cli("check " + garbage.string()).exit_code == 2);

  CHECK(run_cli("check /no/such/file.json").exit_code == 2);
  CHECK(run_cli("check builtin:nope").exit_code == 2);

  // A valid algebra file loads through the same path as the builtins.
  auto good = write_temp("hopfind_cli_h8.json", dump_canonical(algebra_to_json(*h8().algebra)));
  CliResult from_file = run_cli("check " + good.string());
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.contains("all passed"));
}

TEST_CASE("integral command") {
  CliResult h8i = run_cli("integral builtin:h8");
  CHECK(h8i.exit_code == 0);
  CHECK(h8i.contains("xyz"));
  size_t count = 0;
  for (size_t pos = 0; (pos = h8i.output.find("1/8", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 8);

  CliResult c2 = run_cli("integral builtin:group/c2");
  CHECK(c2.exit_code == 0);
  CHECK(c2.contains("1/2"));

  CliResult s3 = run_cli("integral builtin:group/s3 --format json");
  CHECK(s3.exit_code == 0);
  Json parsed = parse_json_text(s3.output);
  CHECK(parsed["integral"].size() == 6);
}

TEST_CASE("indicators command reproduces the golden table") {
  CliResult table = run_cli("indicators builtin:h8 --m 2 --all --format json");
  REQUIRE(table.exit_code == 0);
  Json j = parse_json_text(table.output);
  CHECK(j["rows"] == Json::array({"tau1", "tau2", "tau3", "tau4"}));
  CHECK(j["cols"] == Json::array({"chi1", "chi2", "chi3", "chi4", "chi5"}));
  const int expect[4][5] = {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 0, 0, 1}, {1, 1, 0, 0, -1}};
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 5; ++c) CHECK(cyc_from_json(j["values"][r][c]) == CycNum(expect[r][c]));
  CHECK(j["methods_agreed"] == true);

  // Emitted JSON re-renders byte-identically.
  CHECK(dump_canonical(parse_json_text(table.output)) == table.output);

  // Text and JSON agree on the mathematical content.
  CliResult text = run_cli("indicators builtin:h8 --m 2 --all");
  CHECK(text.exit_code == 0);
  CHECK(text.contains("tau4     1     1     0     0    -1"));

  CliResult cell = run_cli("indicators builtin:h8 --m 2 --auto tau1 --module chi5");
  CHECK(cell.exit_code == 0);
  CHECK(cell.output == "1\n");

  CliResult c3 = run_cli("indicators builtin:group/c3 --m 2 --auto inversion --all");
  CHECK(c3.exit_code == 0);
  CHECK(c3.contains("inversion     1     1     1"));
}

TEST_CASE("divisibility violations are usage errors") {
  CliResult bad = run_cli("indicators builtin:h8 --m 3 --all");
  CHECK(bad.exit_code == 2);
  CHECK(bad.contains("only defined for m divisible by the order"));

  CHECK(run_cli("regular builtin:h8 --auto tau3 --m 3").exit_code == 2);
}

TEST_CASE("regular command") {
  CliResult r = run_cli("regular builtin:h8 --auto tau3 --m 2 --show-map");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("= 4"));
  CHECK(r.contains("1/2*z + 1/2*xz + 1/2*yz - 1/2*xyz"));

  CliResult c4 = run_cli("regular builtin:group/c4 --auto id --m 2");
  CHECK(c4.exit_code == 0);
  CHECK(c4.contains("= 2"));

  CliResult json = run_cli("regular builtin:h8 --auto tau1 --m 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(cyc_from_json(parse_json_text(json.output)["value"]) == CycNum(6));
}

TEST_CASE("duality command") {
  CliResult zero = run_cli("duality builtin:h8 --module chi4 --auto tau4");
  CHECK(zero.exit_code == 0);
  CHECK(zero.contains("indicator: 0"));
  CHECK(zero.contains("selfdual: no"));

  CliResult skew = run_cli("duality builtin:h8 --module chi5 --auto tau4");
  CHECK(skew.exit_code == 0);
  CHECK(skew.contains("indicator: -1"));
  CHECK(skew.contains("parity: skew"));

  CliResult q8 = run_cli("duality builtin:group/q8 --module dim2 --auto id --format json");
  CHECK(q8.exit_code == 0);
  Json j = parse_json_text(q8.output);
  CHECK(j["indicator"] == -1);
  CHECK(j["parity"] == "skew");

  // Non-irreducible module files are rejected as usage errors.
  AlgebraBundle b = h8();
  Representation doubled = direct_sum(b.modules[0].rep, b.modules[0].rep);
  ModuleFile file{"builtin:h8", doubled.vdim, doubled.matrices};
  auto path = write_temp("hopfind_cli_doubled.json", dump_canonical(module_to_json(file)));
  CliResult rejected = run_cli("duality builtin:h8 --module " + path.string() + " --auto tau1");
  CHECK(rejected.exit_code == 2);
  CHECK(rejected.contains("absolutely irreducible"));
}

TEST_CASE("module and automorphism files resolve against a file algebra") {
  AlgebraBundle b = h8();
  auto algebra = write_temp("hopfind_cli_alg.json", dump_canonical(algebra_to_json(*b.algebra)));
  ModuleFile mod{"builtin:h8", 2, b.modules[4].rep.matrices};
  auto module = write_temp("hopfind_cli_chi5.json", dump_canonical(module_to_json(mod)));
  AutomorphismFile aut{"builtin:h8", b.automorphisms[3].aut.matrix};
  auto tau = write_temp("hopfind_cli_tau4.json", dump_canonical(automorphism_to_json(aut)));

  CliResult r = run_cli("duality " + algebra.string() + " --module " + module.string() + " --auto " + tau.string());
  CHECK(r.exit_code == 0);
  CHECK(r.contains("indicator: -1"));

  // A file algebra has no built-in modules to enumerate.
  CHECK(run_cli("indicators " + algebra.string() + " --m 2 --all").exit_code == 2);
}

TEST_CASE("order cap override and cross-check toggle") {
  AlgebraBundle b = h8();
  AutomorphismFile aut{"builtin:h8", b.automorphisms[3].aut.matrix};
  auto tau = write_temp("hopfind_cli_tau4b.json", dump_canonical(automorphism_to_json(aut)));

  // tau4 has order 2; with the cap forced to 1 its validation must fail.
  CliResult capped = run_cli("duality builtin:h8 --module chi5 --auto " + tau.string(), "HOPF_FS_MAX_ORDER=1 ");
  CHECK(capped.exit_code == 1);
  CHECK(capped.contains("order exceeds the cap"));
  CHECK(run_cli("duality builtin:h8 --module chi5 --auto " + tau.string(), "HOPF_FS_MAX_ORDER=8 ").exit_code == 0);
  CHECK(run_cli("check builtin:h8", "HOPF_FS_MAX_ORDER=bogus ").exit_code == 2);

  CliResult fast = run_cli("indicators builtin:h8 --m 2 --all --no-cross-check --format json");
  CHECK(fast.exit_code == 0);
  CHECK(parse_json_text(fast.output)["values"] ==
        parse_json_text(run_cli("indicators builtin:h8 --m 2 --all --format json").output)["values"]);
}

TEST_CASE("orthogonality command") {
  CliResult r = run_cli("orthogonality builtin:h8");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("identity: yes"));

  CliResult dup = run_cli("orthogonality builtin:h8 --module chi1 --module chi1");
  CHECK(dup.exit_code == 1);
  CHECK(dup.contains("identity: no"));
}

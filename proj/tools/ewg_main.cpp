// ewg_main.cpp -- command-line driver.  Three verbs: `verify` runs the named
// check suites against a scenario and reports pass/fail per check, `eval`
// prints the Lagrangian tables at the scenario's field point, `dump` prints a
// standard component table.  Exit code 0 means every check passed, 1 means at
// least one check failed, 2 means the request itself was unusable.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ewgeom/errors.hpp"
#include "ewgeom/json_io.hpp"

namespace {

ewgeom::Scenario load(const std::string& path) {
  if (path.empty()) return ewgeom::parse_scenario(ewgeom::default_scenario_text());
  return ewgeom::load_scenario_file(path);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ewgeom::ParseError("cannot write output file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-spinor gauge-geometry toolkit"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::vector<std::string> suites;
  std::string emit = "text";
  std::string backend;
  std::string out_path;
  std::string kind;
  double tol = -1.0;

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--scenario", scenario_path,
                     "scenario file; the built-in default scenario when omitted");
  verify->add_option("--suite", suites, "suite names overriding the scenario's list")
      ->delimiter(',');
  verify->add_option("--emit", emit, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--tol", tol, "tolerance override for unpinned float checks");
  verify->add_option("--backend", backend, "preferred arithmetic backend")
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--out", out_path, "write the report to this file instead of stdout");

  CLI::App* eval =
      app.add_subcommand("eval", "evaluate the Lagrangian tables at the scenario point");
  eval->add_option("--scenario", scenario_path,
                   "scenario file; the built-in default scenario when omitted");
  eval->add_option("--out", out_path, "write the evaluation to this file instead of stdout");

  CLI::App* dump = app.add_subcommand("dump", "print a standard component table");
  dump->add_option("kind", kind,
                   "one of gamma-weyl, gamma-dirac, iota-frame, structure-constants-su2")
      ->required();
  dump->add_option("--out", out_path, "write the table to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is a success, anything else is a usage error
  }

  try {
    if (verify->parsed()) {
      ewgeom::Scenario sc = load(scenario_path);
      if (!suites.empty()) sc.suites = suites;
      if (tol > 0) sc.tolerance = tol;
      if (!backend.empty()) sc.backend = backend;
      const ewgeom::Report report = ewgeom::run_suites(sc);
      write_output(emit == "json" ? ewgeom::report_json(report).dump(2) + "\n"
                                  : ewgeom::report_text(report),
                   out_path);
      return report.failed_count() == 0 ? 0 : 1;
    }
    if (eval->parsed()) {
      write_output(ewgeom::evaluate_point(load(scenario_path)).dump(2) + "\n", out_path);
      return 0;
    }
    if (dump->parsed()) {
      write_output(ewgeom::dump_table(kind).dump(2) + "\n", out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

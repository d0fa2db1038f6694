#pragma once
// Batch plumbing: strict versioned JSON scenarios, named verification suites
// with per-check records, deterministic report emission, and constant-table
// dumps for external diffing.
//
// Wire conventions (schema 1): unknown keys are rejected everywhere, rational
// numbers travel as "p/q" strings, complex numbers as [re, im] pairs.  Check
// ids are unique and reports are sorted by id, so identical inputs produce
// identical output bytes.  Each check is marked with the backend that ran it;
// mixing-angle-dependent checks always run on floats, everything else runs
// exactly unless the scenario asks for the float backend.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ewgeom/ewsector.hpp"
#include "ewgeom/scales.hpp"
#include "ewgeom/tetrad.hpp"

namespace ewgeom {

struct Scenario {
  std::string name = "default";
  std::string backend = "exact";  // "exact" or "float"
  double tolerance = 1e-12;       // default bound for unpinned float checks
  std::vector<std::string> suites;

  double theta_w = 0.6;
  double mu = 1.0;
  double lambda = 1.0;
  CxVec2 phi{Cx(0.0, 0.0), Cx(1.0, 0.0)};
  FermionValue psi;
  EWGaugeFields gauge;
  Tetrad tetrad = Tetrad::identity();
  std::map<std::string, ScaleDim> field_dims;  // starts from the standard table
};

struct CheckRecord {
  std::string id;
  std::string suite;
  std::string backend;  // "exact" or "float"
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string anchor;  // plain statement of the fact being checked
};

struct Report {
  std::string scenario;
  std::vector<CheckRecord> checks;  // sorted by id
  int failed_count() const;
};

// "p/q" or plain integer string; ParseError on anything else
Rational parse_fraction(const std::string& text);
std::string format_fraction(const Rational& value);

// the scenario the binary falls back to when no file is given
std::string default_scenario_text();

// strict parse: ParseError for malformed JSON or unreadable files,
// SchemaError for unknown keys, wrong types, wrong arities, or a missing or
// unsupported schema version
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

const std::vector<std::string>& known_suites();

// runs the scenario's suites; UnknownSuite for names outside the list
Report run_suites(const Scenario& scenario);

// CheckFailure when the report contains failed checks
void require_clean(const Report& report);

nlohmann::ordered_json report_json(const Report& report);
std::string report_text(const Report& report);

// pointwise evaluation of the scenario inputs: Lagrangian terms with their
// scale dimensions, potential and polar data, gauge trace components, and the
// per-term weight audit
nlohmann::ordered_json evaluate_point(const Scenario& scenario);

// kind in {gamma-weyl, gamma-dirac, iota-frame, structure-constants-su2};
// UnknownKind otherwise
nlohmann::ordered_json dump_table(const std::string& kind);

}  // namespace ewgeom

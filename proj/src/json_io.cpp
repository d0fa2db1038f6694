// json_io.cpp -- scenario files, the verification suites, reports and dumps
// behind the command-line driver.  The wire format is strict: unknown keys,
// wrong arities and wrong types are schema errors, not warnings, so that a
// typo in a scenario can never silently skip a check.

#include "ewgeom/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "ewgeom/audit.hpp"
#include "ewgeom/fnforms.hpp"
#include "ewgeom/gaugealg.hpp"
#include "ewgeom/twospinor.hpp"

namespace ewgeom {

namespace {

using Json = nlohmann::ordered_json;

// ----------------------------- strict accessors ------------------------------

[[noreturn]] void schema_fail(const std::string& message) { throw SchemaError(message); }

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) schema_fail(where + ": unknown key '" + item.key() + "'");
  }
}

const Json& get_object(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_fail(where + " must be an object");
  return j;
}

double get_number(const Json& j, const std::string& where) {
  if (!j.is_number()) schema_fail(where + " must be a number");
  return j.get<double>();
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where + " must be an integer");
  return j.get<int>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where + " must be a string");
  return j.get<std::string>();
}

// complex numbers ride as [re, im]
Cx get_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_fail(where + " must be a [re, im] pair");
  return Cx(get_number(j[0], where + "[0]"), get_number(j[1], where + "[1]"));
}

const Json& get_array(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    schema_fail(where + " must be an array of length " + std::to_string(size));
  return j;
}

// ------------------------------ small utilities ------------------------------

const double kPi = std::acos(-1.0);

CxMatrix to_float(const ExactMatrix& m) {
  CxMatrix out(m.extent());
  for (int i = 0; i < m.extent(); ++i)
    for (int j = 0; j < m.extent(); ++j) out.at(i, j) = m.at(i, j).to_complex();
  return out;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

// |t| + |l| + |m| of a scale dimension; zero exactly when balanced
double dim_imbalance(const ScaleDim& d) {
  return std::abs(rational_to_double(d.t)) + std::abs(rational_to_double(d.l)) +
         std::abs(rational_to_double(d.m));
}

Json dim_json(const ScaleDim& d) {
  Json j;
  j["t"] = format_fraction(d.t);
  j["l"] = format_fraction(d.l);
  j["m"] = format_fraction(d.m);
  return j;
}

Json scaled_json(const ScaledReal& v) {
  Json j;
  j["value"] = v.value;
  j["dim"] = dim_json(v.dim);
  return j;
}

Json complex_json(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CxMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.extent(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.extent(); ++j) row.push_back(complex_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// ------------------------------- check plumbing ------------------------------

// Every check reports a measured number against an expected one; it passes
// when |measured - expected| <= tolerance.  Exact checks count violations and
// use tolerance zero.
struct Sink {
  const Scenario& sc;
  Report& report;
  std::string suite;

  void push(const std::string& short_id, bool exact_run, double measured, double expected,
            double tol, const std::string& anchor) {
    CheckRecord rec;
    rec.id = suite + "/" + short_id;
    rec.suite = suite;
    rec.backend = exact_run ? "exact" : "float";
    rec.measured = measured;
    rec.expected = expected;
    rec.tolerance = tol;
    rec.passed = std::abs(measured - expected) <= tol;
    rec.anchor = anchor;
    report.checks.push_back(rec);
  }

  // residual-style check whose computation may throw on bad scenario inputs;
  // a thrown error fails the check and carries the message in the anchor
  template <typename F>
  void guarded(const std::string& short_id, bool exact_run, double tol,
               const std::string& anchor, F&& body) {
    try {
      push(short_id, exact_run, body(), 0.0, tol, anchor);
    } catch (const std::exception& e) {
      push(short_id, exact_run, std::numeric_limits<double>::quiet_NaN(), 0.0, tol,
           anchor + " [threw: " + e.what() + "]");
    }
  }
};

// ------------------------- suite: spinor-clifford ----------------------------

void run_spinor_clifford(const Scenario& sc, Sink& sink) {
  const bool exact = sc.backend == "exact";
  const TwoSpinorFrame frame;
  const auto tau = pauli_basis(frame);
  const auto sigma = sigma_matrices();

  // polarized determinant of the Pauli frame is the Minkowski table
  if (exact) {
    double bad = 0;
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        if (!(spinor_metric(tau[static_cast<std::size_t>(l)],
                            tau[static_cast<std::size_t>(m)]) == eta_coeff(l, m)))
          bad += 1;
    sink.push("pauli-orthonormality", true, bad, 0.0, 0.0,
              "polarized-determinant pairing of the Pauli frame equals diag(1,-1,-1,-1)");
  } else {
    double worst = 0;
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m) {
        const Cx val = spinor_metric(to_float(tau[static_cast<std::size_t>(l)]),
                                     to_float(tau[static_cast<std::size_t>(m)]));
        worst = std::max(worst, std::abs(val - eta_coeff(l, m).to_complex()));
      }
    sink.push("pauli-orthonormality", false, worst, 0.0, sc.tolerance,
              "polarized-determinant pairing of the Pauli frame equals diag(1,-1,-1,-1)");
  }

  // anticommutators close on 2 eta Id in both component bases
  for (const auto& [basis, name] :
       {std::pair{WBasis::weyl, "weyl"}, std::pair{WBasis::dirac, "dirac"}}) {
    double bad = 0, worst = 0;
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m) {
        const ExactMatrix gl = gamma_matrix(l, basis, frame);
        const ExactMatrix gm = gamma_matrix(m, basis, frame);
        const ExactMatrix anti = gl * gm + gm * gl;
        const ExactMatrix want =
            (ExactComplex(2) * eta_coeff(l, m)) * ExactMatrix::identity(4);
        if (exact) {
          if (!(anti - want).is_zero()) bad += 1;
        } else {
          worst = std::max(worst, (to_float(anti) - to_float(want)).max_abs());
        }
      }
    sink.push(std::string("clifford-") + name, exact, exact ? bad : worst, 0.0,
              exact ? 0.0 : sc.tolerance,
              "anticommutator of the Clifford generators is twice the metric coefficient");
  }

  // entrywise block tables: Weyl has -sigma in the upper-right and
  // (-sigma_0 | +sigma_k) in the lower-left; the energy-split basis has the
  // diagonal (+,+,-,-) time component and (-sigma_k | +sigma_k) blocks
  double table_bad = 0;
  for (int l = 0; l < 4; ++l) {
    const ExactMatrix gw = gamma_matrix(l, WBasis::weyl, frame);
    const ExactMatrix& s = sigma[static_cast<std::size_t>(l)];
    const ExactComplex lower = (l == 0) ? ExactComplex(-1) : ExactComplex(1);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (!(gw.at(a, b) == ExactComplex(0))) table_bad += 1;
        if (!(gw.at(2 + a, 2 + b) == ExactComplex(0))) table_bad += 1;
        if (!(gw.at(a, 2 + b) == ExactComplex(-1) * s.at(a, b))) table_bad += 1;
        if (!(gw.at(2 + a, b) == lower * s.at(a, b))) table_bad += 1;
      }
  }
  ExactMatrix g0d(4);
  g0d.at(0, 0) = ExactComplex(1);
  g0d.at(1, 1) = ExactComplex(1);
  g0d.at(2, 2) = ExactComplex(-1);
  g0d.at(3, 3) = ExactComplex(-1);
  if (!(gamma_matrix(0, WBasis::dirac, frame) == g0d)) table_bad += 1;
  for (int k = 1; k < 4; ++k) {
    const ExactMatrix gd = gamma_matrix(k, WBasis::dirac, frame);
    const ExactMatrix& s = sigma[static_cast<std::size_t>(k)];
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (!(gd.at(a, b) == ExactComplex(0))) table_bad += 1;
        if (!(gd.at(2 + a, 2 + b) == ExactComplex(0))) table_bad += 1;
        if (!(gd.at(a, 2 + b) == ExactComplex(-1) * s.at(a, b))) table_bad += 1;
        if (!(gd.at(2 + a, b) == s.at(a, b))) table_bad += 1;
      }
  }
  sink.push("gamma-tables", true, table_bad, 0.0, 0.0,
            "Clifford component tables match the standard block forms entrywise");
}

// ---------------------------- suite: signatures -------------------------------

void run_signatures(const Scenario& sc, Sink& sink) {
  const bool exact = sc.backend == "exact";
  const Signature split{2, 2, 0};
  for (const auto& [basis, name] :
       {std::pair{WBasis::weyl, "weyl"}, std::pair{WBasis::dirac, "dirac"}}) {
    const ExactMatrix k = k_matrix(basis);
    const Signature sig = exact ? signature(k) : signature(to_float(k));
    sink.push(std::string("dirac-pairing-") + name, exact, sig == split ? 0.0 : 1.0, 0.0,
              0.0, "Dirac pairing splits as (2,2,0); found " + to_string(sig));
  }

  sink.guarded("pullback-metric", false, 0.0,
               "soldering-form pullback of the Pauli metric has Lorentz signature (1,3,0)",
               [&] {
                 const Signature sig = signature(pullback_metric(sc.tetrad).matrix);
                 return sig == Signature{1, 3, 0} ? 0.0 : 1.0;
               });
}

// --------------------------- suite: fn-identities ----------------------------

// helpers shared by the bracket checks: sparse random polynomial data, all
// exact, seeded per check so the report is reproducible byte for byte

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  int n = num(rng);
  if (n == 0) n = 1;
  return Rational(n, den(rng));
}

Poly sparse_poly(int nvars, std::mt19937_64& rng, int first_var, int last_var,
                 int max_terms = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> pick(first_var, last_var - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  Poly p(nvars);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(pick(rng))] = expo(rng);
    ExactComplex c(small_rational(rng));
    if (coin(rng) == 0) c = c * ExactComplex::i();
    p.add_term(e, c);
  }
  return p;
}

TVForm sparse_tvform(const Chart& chart, int degree, std::mt19937_64& rng, int entries = 3) {
  TVForm out(chart, degree);
  const auto tuples = increasing_tuples(chart.total_dim(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  std::uniform_int_distribution<int> val(0, chart.total_dim() - 1);
  for (int e = 0; e < entries; ++e)
    out.set(tuples[pick(rng)], val(rng),
            sparse_poly(chart.total_dim(), rng, 0, chart.total_dim()));
  return out;
}

std::vector<PolyMatrix> sparse_linear_coefficients(const Chart& chart, std::mt19937_64& rng) {
  std::vector<PolyMatrix> mats;
  for (int a = 0; a < chart.base_dim; ++a) {
    PolyMatrix m(chart.fiber_dim, chart.total_dim());
    for (int i = 0; i < chart.fiber_dim; ++i)
      for (int j = 0; j < chart.fiber_dim; ++j)
        m.at(i, j) = sparse_poly(chart.total_dim(), rng, 0, chart.base_dim);
    mats.push_back(m);
  }
  return mats;
}

// product of elementary shears, determinant exactly one
PolyMatrix sparse_unimodular(const Chart& chart, std::mt19937_64& rng) {
  const int k = chart.fiber_dim, total = chart.total_dim();
  PolyMatrix s = PolyMatrix::identity(k, total);
  std::uniform_int_distribution<int> row(0, k - 1);
  for (int step = 0; step < 3; ++step) {
    int i = row(rng), j = row(rng);
    if (i == j) j = (j + 1) % k;
    PolyMatrix shear = PolyMatrix::identity(k, total);
    shear.at(i, j) = sparse_poly(total, rng, 0, chart.base_dim);
    s = s * shear;
  }
  return s;
}

Poly scalar_poly(const Chart& chart, int value) {
  return Poly::constant(chart.total_dim(), ExactComplex(value));
}

// classical Lie bracket of vector fields, [u,v]^b = u^c d_c v^b - v^c d_c u^b
TVForm lie_bracket_reference(const TVForm& u, const TVForm& v) {
  const Chart& chart = u.chart();
  const int total = chart.total_dim();
  TVForm out(chart, 0);
  for (int b = 0; b < total; ++b) {
    Poly s(total);
    for (int c = 0; c < total; ++c)
      s = s + u.component({}, c) * v.component({}, b).partial(c) -
          v.component({}, c) * u.component({}, b).partial(c);
    out.set({}, b, s);
  }
  return out;
}

// linear-connection curvature, R_ab = d_b Gamma_a - d_a Gamma_b + [Gamma_a, Gamma_b]
PolyMatrix curvature_matrix_reference(const std::vector<PolyMatrix>& gammas, int a, int b) {
  const PolyMatrix& ga = gammas[static_cast<std::size_t>(a)];
  const PolyMatrix& gb = gammas[static_cast<std::size_t>(b)];
  return ga.partial(b) - gb.partial(a) + ga * gb - gb * ga;
}

void run_fn_identities(const Scenario&, Sink& sink) {
  // bracket degrees may not exceed the base dimension, so each case fixes a
  // chart together with admissible form degrees
  {
    std::mt19937_64 rng(0xc19bf174cf692694ULL);
    double bad = 0;
    const struct {
      int n, k, r, s;
    } cases[] = {{2, 1, 0, 0}, {2, 1, 0, 1}, {2, 2, 1, 1}, {3, 1, 1, 2}, {4, 1, 2, 2}};
    for (const auto& c : cases) {
      const Chart chart(c.n, c.k);
      for (int trial = 0; trial < 2; ++trial) {
        const TVForm phi = sparse_tvform(chart, c.r, rng);
        const TVForm psi = sparse_tvform(chart, c.s, rng);
        const int sign = (c.r * c.s) % 2 == 0 ? -1 : 1;
        if (!(fn_bracket(phi, psi) == scalar_poly(chart, sign) * fn_bracket(psi, phi)))
          bad += 1;
      }
    }
    sink.push("graded-antisymmetry", true, bad, 0.0, 0.0,
              "tangent-valued bracket flips with the graded sign (-1)^(rs+1)");
  }

  {
    std::mt19937_64 rng(0xe49b69c19ef14ad2ULL);
    double bad = 0;
    const struct {
      int n, k, r, s, t;
    } cases[] = {{2, 1, 0, 0, 0}, {2, 1, 1, 0, 0}, {3, 1, 1, 1, 0}, {3, 1, 1, 1, 1}};
    for (const auto& c : cases) {
      const Chart chart(c.n, c.k);
      const TVForm phi = sparse_tvform(chart, c.r, rng, 2);
      const TVForm psi = sparse_tvform(chart, c.s, rng, 2);
      const TVForm theta = sparse_tvform(chart, c.t, rng, 2);
      const auto sgn = [](int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; };
      const TVForm total =
          scalar_poly(chart, sgn(c.r, c.t)) * fn_bracket(fn_bracket(phi, psi), theta) +
          scalar_poly(chart, sgn(c.s, c.r)) * fn_bracket(fn_bracket(psi, theta), phi) +
          scalar_poly(chart, sgn(c.t, c.s)) * fn_bracket(fn_bracket(theta, phi), psi);
      if (!total.is_zero()) bad += 1;
    }
    sink.push("graded-jacobi", true, bad, 0.0, 0.0,
              "graded Jacobi sum of double brackets cancels exactly");
  }

  {
    std::mt19937_64 rng(0xefbe4786384f25e3ULL);
    double bad = 0;
    const Chart chart(2, 2);
    for (int trial = 0; trial < 6; ++trial) {
      const TVForm u = sparse_tvform(chart, 0, rng);
      const TVForm v = sparse_tvform(chart, 0, rng);
      if (!(fn_bracket(u, v) == lie_bracket_reference(u, v))) bad += 1;
    }
    sink.push("vector-bracket", true, bad, 0.0, 0.0,
              "degree-zero bracket reduces to the classical vector-field bracket");
  }

  {
    std::mt19937_64 rng(0x0fc19dc68b8cd5b5ULL);
    double bad = 0;
    for (const Chart& chart : {Chart(2, 2), Chart(3, 1)})
      for (int trial = 0; trial < 3; ++trial) {
        const auto gammas = sparse_linear_coefficients(chart, rng);
        const auto mats = curvature_matrices(Connection::linear(chart, gammas));
        for (int a = 0; a < chart.base_dim; ++a)
          for (int b = 0; b < chart.base_dim; ++b)
            if (!(mats[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                  curvature_matrix_reference(gammas, a, b))
                     .is_zero())
              bad += 1;
      }
    sink.push("curvature-closed-form", true, bad, 0.0, 0.0,
              "bracket curvature of a linear connection matches the closed-form "
              "coefficient matrices");
  }

  {
    std::mt19937_64 rng(0x240ca1cc77ac9c65ULL);
    double bad = 0;
    const Chart chart(2, 2);
    for (int trial = 0; trial < 3; ++trial) {
      const Connection conn = Connection::linear(chart, sparse_linear_coefficients(chart, rng));
      const Connection flat_ref =
          gauge_transform(Connection(chart), sparse_unimodular(chart, rng));
      const TVForm alpha = decompose_alpha(conn, flat_ref);
      const TVForm split = scalar_poly(chart, -2) *
                               fn_bracket(flat_ref.as_tvform(), alpha) -
                           fn_bracket(alpha, alpha);
      if (!(curvature(conn) == split)) bad += 1;
    }
    sink.push("flat-reference-split", true, bad, 0.0, 0.0,
              "curvature splits against a flat reference as -2[ref, offset] - "
              "[offset, offset]");
  }
}

// --------------------------- suite: gauge-algebra ----------------------------

std::vector<std::vector<std::vector<ExactComplex>>> abelian_constants(int m) {
  return {static_cast<std::size_t>(m),
          std::vector<std::vector<ExactComplex>>(
              static_cast<std::size_t>(m),
              std::vector<ExactComplex>(static_cast<std::size_t>(m), ExactComplex(0)))};
}

Poly sparse_base_poly(int nvars, int base_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, 2);
  Poly p(nvars);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Poly::Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int v = 0; v < base_dim; ++v) e[static_cast<std::size_t>(v)] = expo(rng);
    p.add_term(e, ExactComplex(small_rational(rng)));
  }
  return p;
}

void run_gauge_algebra(const Scenario& sc, Sink& sink) {
  const auto sigma = sigma_matrices();
  std::vector<ExactMatrix> gens = {ExactComplex::i() * sigma[1], ExactComplex::i() * sigma[2],
                                   ExactComplex::i() * sigma[3]};
  const auto frame = orthonormalize(gens);
  const auto c = structure_constants(frame);

  {
    // totally antisymmetric table c_hjk = -eps_hjk
    double bad = 0;
    for (int h = 0; h < 3; ++h)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int eps = (j - h) * (k - h) * (k - j) / 2;
          if (!(c[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)] == ExactComplex(-eps)))
            bad += 1;
        }
    sink.push("su2-structure-constants", true, bad, 0.0, 0.0,
              "orthonormalized spin generators close with minus the alternating symbol");
  }

  {
    double bad = 0;
    for (int h = 0; h < 3; ++h)
      for (int j = 0; j < 3; ++j)
        if (!(killing_like(frame.generators[static_cast<std::size_t>(h)],
                           frame.generators[static_cast<std::size_t>(j)]) ==
              ExactComplex(h == j ? 1 : 0)))
          bad += 1;
    sink.push("orthonormal-frame", true, bad, 0.0, 0.0,
              "trace-form Gram matrix of the orthonormalized frame is the identity");
  }

  {
    // h-contraction of anti-Hermitian pairs halves the trace form
    std::mt19937_64 rng(0x2de92c6f592b0275ULL);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const CxMatrix h = CxMatrix::identity(3);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
      CxMatrix m(3), n(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          m.at(i, j) = Cx(dist(rng), dist(rng));
          n.at(i, j) = Cx(dist(rng), dist(rng));
        }
      const CxMatrix x = m - m.dagger();
      const CxMatrix y = n - n.dagger();
      const Cx diff = h_contract(x, y, h) - 0.5 * killing_like(x, y);
      worst = std::max(worst, std::abs(diff));
    }
    sink.push("half-killing", false, worst, 0.0, 1e-12,
              "Hermitian contraction of anti-Hermitian pairs is half the trace form");
  }

  {
    // one-dimensional fibre: the charged table is -q times the exterior
    // differential of the strength one-form
    std::mt19937_64 rng(0x4a7484aa6ea6e483ULL);
    const Chart chart(3, 1);
    const Poly minus_q = -charge_poly(3);
    double bad = 0;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::vector<Poly>> comps(3, std::vector<Poly>(1, Poly(4)));
      ScalarForm one_form(chart, 1);
      for (int a = 0; a < 3; ++a) {
        comps[static_cast<std::size_t>(a)][0] = sparse_base_poly(4, 3, rng);
        one_form.set({a}, comps[static_cast<std::size_t>(a)][0]);
      }
      const ChargedField field(3, 1, comps);
      const auto curv = charged_curvature(field, abelian_constants(1));
      const ScalarForm dx = exterior_differential(one_form);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (!(curv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][0] ==
                minus_q * dx.component({a, b})))
            bad += 1;
    }
    sink.push("abelian-line-bundle", true, bad, 0.0, 0.0,
              "commuting charged curvature equals minus charge times the exterior "
              "differential");
  }

  {
    // hand-expanded spin sample: q-degrees exactly {0,1,2}, charge-free kinetic part
    const auto names = charged_names(4);
    std::vector<std::vector<Poly>> comps(4, std::vector<Poly>(3, Poly(5)));
    comps[0][0] = parse_poly("x2", names);
    comps[1][1] = parse_poly("x1", names);
    comps[1][2] = parse_poly("x1^2", names);
    const ChargedField field(4, 3, comps);
    const auto curv = charged_curvature(field, c);
    ExactMatrix g_inv(4);
    g_inv.at(0, 0) = ExactComplex(1);
    for (int s = 1; s < 4; ++s) g_inv.at(s, s) = ExactComplex(-1);
    const Poly ell = gauge_lagrangian(field, curv, g_inv);
    double bad = 0;
    if (!(ell == parse_poly("1/2 + x1^2 + q x1^2 x2 + q^2 x1^4 x2^2 + q^2 x1^2 x2^2",
                            names)))
      bad += 1;
    if (ell.degree_in(4) != 2) bad += 1;
    for (int d = 0; d <= 2; ++d)
      if (ell.coefficient_of(4, d).is_zero()) bad += 1;
    const Poly kinetic = ell.coefficient_of(4, 0);
    if (kinetic.degree_in(4) != 0) bad += 1;
    if (!(kinetic == parse_poly("1/2 + x1^2", names))) bad += 1;
    sink.push("lagrangian-grading", true, bad, 0.0, 0.0,
              "strength Lagrangian carries charge degrees {0,1,2} with a charge-free "
              "kinetic part");
  }

  (void)sc;
}

// ---------------------------- suite: ew-breaking ------------------------------

// ambient rank-one square xibar_alpha (x) xi_beta of the standard frame
CxMatrix standard_rank_one(int alpha, int beta) {
  const IsospinFrame frame;
  CxMatrix out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.at(i, j) = std::conj(frame.xi[static_cast<std::size_t>(alpha)]
                                       [static_cast<std::size_t>(i)]) *
                     frame.xi[static_cast<std::size_t>(beta)][static_cast<std::size_t>(j)];
  return out;
}

// sesquilinear Frobenius pairing on standard-frame components
Cx doubled_pairing(const CxMatrix& m, const CxMatrix& n) {
  Cx sum(0.0, 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sum += std::conj(m.at(i, j)) * n.at(i, j);
  return sum;
}

void run_ew_breaking(const Scenario& sc, Sink& sink) {
  const bool exact = sc.backend == "exact";
  const IsospinFrame frame;

  {
    // trace-polarized pairing Gram of the isospin Pauli frame is 2 eta; the
    // standard frame makes the ambient matrices the exact Pauli table
    const auto sigma = sigma_matrices();
    if (exact) {
      double bad = 0;
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m) {
          const ExactMatrix& a = sigma[static_cast<std::size_t>(l)];
          const ExactMatrix& b = sigma[static_cast<std::size_t>(m)];
          const ExactComplex val = a.trace() * b.trace() - (a * b).trace();
          if (!(val == ExactComplex(2) * eta_coeff(l, m))) bad += 1;
        }
      sink.push("pauli-frame-metric", true, bad, 0.0, 0.0,
                "trace-polarized Gram of the isospin Pauli frame doubles diag(1,-1,-1,-1)");
    } else {
      const auto iota = iota_frame(frame);
      double worst = 0;
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m) {
          const Cx val = epsilon_pairing(iota[static_cast<std::size_t>(l)],
                                         iota[static_cast<std::size_t>(m)], frame);
          worst = std::max(worst, std::abs(val - 2.0 * eta_coeff(l, m).to_complex()));
        }
      sink.push("pauli-frame-metric", false, worst, 0.0, sc.tolerance,
                "trace-polarized Gram of the isospin Pauli frame doubles diag(1,-1,-1,-1)");
    }
  }

  sink.guarded(
      "mixing-identity", false, 1e-14,
      "mixing-angle direction equals its rank-one expansion at every sampled angle",
      [&] {
        double worst = 0;
        std::vector<double> angles;
        for (int k = 1; k <= 100; ++k) angles.push_back(k * (kPi / 2.0) / 101.0);
        angles.push_back(sc.theta_w);
        for (double theta : angles) {
          const CxMatrix lhs = iota_prime(frame, theta);
          const double c2 = std::cos(2.0 * theta);
          const CxMatrix rhs = (-0.5) * standard_rank_one(0, 0) +
                               (0.5 * c2) * standard_rank_one(1, 1);
          worst = std::max(worst, (lhs - rhs).max_abs());
        }
        return worst;
      });

  sink.guarded(
      "assembly-round-trip", false, 1e-12,
      "gauge-field assembly followed by extraction returns the input components",
      [&] {
        std::mt19937_64 rng(0x5cb0a9dcbd41fbd4ULL);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        double worst = 0;
        for (int trial = 0; trial < 120; ++trial) {
          EWGaugeFields fields;
          fields.theta_w = sc.theta_w;
          if (trial == 0) {
            fields = sc.gauge;  // the scenario's own field point rides first
          } else {
            for (int a = 0; a < 4; ++a) {
              fields.a[static_cast<std::size_t>(a)] = dist(rng);
              fields.z[static_cast<std::size_t>(a)] = dist(rng);
              fields.wp[static_cast<std::size_t>(a)] = Cx(dist(rng), dist(rng));
            }
          }
          const CxMatrix w = assemble_w(fields, frame);
          const EWGaugeFields back = extract_fields(w, fields.theta_w, frame);
          for (int a = 0; a < 4; ++a) {
            worst = std::max(worst, std::abs(back.a[static_cast<std::size_t>(a)] -
                                             fields.a[static_cast<std::size_t>(a)]));
            worst = std::max(worst, std::abs(back.z[static_cast<std::size_t>(a)] -
                                             fields.z[static_cast<std::size_t>(a)]));
            worst = std::max(worst, std::abs(back.wp[static_cast<std::size_t>(a)] -
                                             fields.wp[static_cast<std::size_t>(a)]));
          }
        }
        return worst;
      });

  sink.guarded(
      "polar-special-unitary", false, 1e-12,
      "polar split gives a special-unitary rotation that reconstructs the doublet",
      [&] {
        std::mt19937_64 rng(0x76f988da831153b5ULL);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        double worst = 0;
        for (int trial = 0; trial < 50; ++trial) {
          HiggsValue hv;
          hv.mu = sc.mu;
          hv.lambda = sc.lambda;
          if (trial == 0 && (std::abs(sc.phi[0]) > 0 || std::abs(sc.phi[1]) > 0)) {
            hv.phi = sc.phi;
          } else {
            do {
              hv.phi = {Cx(dist(rng), dist(rng)), Cx(dist(rng), dist(rng))};
            } while (std::sqrt(std::norm(hv.phi[0]) + std::norm(hv.phi[1])) < 0.3);
          }
          const HiggsPolar polar = higgs_polar(hv);
          const double norm = std::sqrt(std::norm(hv.phi[0]) + std::norm(hv.phi[1]));
          worst = std::max(worst,
                           (polar.s.dagger() * polar.s - CxMatrix::identity(2)).max_abs());
          const Cx det = polar.s.at(0, 0) * polar.s.at(1, 1) -
                         polar.s.at(0, 1) * polar.s.at(1, 0);
          worst = std::max(worst, std::abs(det - Cx(1.0, 0.0)));
          worst = std::max(worst, std::abs(polar.s.at(0, 1) * norm - hv.phi[0]));
          worst = std::max(worst, std::abs(polar.s.at(1, 1) * norm - hv.phi[1]));
          worst = std::max(worst, std::abs(polar.f.value - (norm - hv.mu)));
        }
        return worst;
      });

  sink.guarded(
      "potential-stationarity", false, 1e-12,
      "potential slope vanishes at the stationary squared norm",
      [&] {
        HiggsValue hv;
        hv.mu = sc.mu;
        hv.lambda = sc.lambda;
        const double s_star = potential_stationary(hv).value;
        const auto potential = [&](double s) {
          return sc.lambda * (2.0 * sc.mu * sc.mu * s - s * s);
        };
        // quadratic in the squared norm, so a wide central difference is exact
        const double h = 0.25 * (1.0 + std::abs(s_star));
        const double slope = (potential(s_star + h) - potential(s_star - h)) / (2.0 * h);
        return std::abs(slope) / (1.0 + std::abs(potential(s_star)));
      });

  {
    const FrameIdentityReport rep = e1_identity_report(frame);
    sink.push("rank-one-identity", false, rep.identity_residual, 0.0, 1e-13,
              "diagonal rank-one square equals half the sum of the time and third "
              "Pauli directions");
    // the alternative pairing the identity is sometimes quoted with misses by
    // a definite margin, so passing cannot be an artifact of a slack bound
    sink.push("rank-one-variant-gap", false, rep.variant_residual, 0.5, 0.45,
              "swapping in the first Pauli direction misses the rank-one square "
              "by about a half");
  }

  sink.guarded(
      "sector-pairing", false, 1e-13,
      "doubled Hermitian pairing separates charged directions; the neutral overlap "
      "is half the doubled-angle cosine",
      [&] {
        const auto iota = iota_frame(frame);
        const CxMatrix photon_dir = 0.5 * (iota[0] - iota[3]);
        const CxMatrix plus_dir = 0.5 * iota[1] + Cx(0.0, 0.5) * iota[2];
        const CxMatrix minus_dir = 0.5 * iota[1] + Cx(0.0, -0.5) * iota[2];
        double worst = 0;
        for (double theta : {0.3, kPi / 4.0, 1.2, sc.theta_w}) {
          const CxMatrix z_dir = iota_prime(frame, theta);
          worst = std::max(worst, std::abs(doubled_pairing(photon_dir, plus_dir)));
          worst = std::max(worst, std::abs(doubled_pairing(photon_dir, minus_dir)));
          worst = std::max(worst, std::abs(doubled_pairing(z_dir, plus_dir)));
          worst = std::max(worst, std::abs(doubled_pairing(z_dir, minus_dir)));
          worst = std::max(worst, std::abs(doubled_pairing(plus_dir, minus_dir)));
          const Cx neutral = doubled_pairing(photon_dir, z_dir);
          worst = std::max(worst, std::abs(neutral - Cx(0.5 * std::cos(2.0 * theta), 0.0)));
        }
        return worst;
      });
}

// -------------------------- suite: lagrangian-audit ---------------------------

void run_lagrangian_audit(const Scenario& sc, Sink& sink) {
  std::map<std::string, ScaleDim> dims = standard_field_dims();
  for (const auto& [name, dim] : sc.field_dims) dims[name] = dim;

  const auto push_entries = [&](const std::string& prefix,
                                const std::vector<TermDescriptor>& terms) {
    for (const AuditEntry& entry : conformal_weight_audit(terms, dims))
      sink.push(prefix + "/" + entry.label, true, dim_imbalance(entry.total), 0.0, 0.0,
                "term composes to the dimensionless density weight");
  };
  push_entries("ew", ew_term_descriptors());
  push_entries("ecmd", ecmd_term_descriptors());
  push_entries("dilaton", {dilaton_term_descriptor()});

  {
    // pure-length ledger of the classical constants: charge balances to the
    // zeroth power, mass to the inverse first, the gravitational coupling to
    // the square
    double bad = 0;
    if (!(to_natural_units(ScaleDim{Rational(-1), Rational(3, 2), Rational(1, 2)}) ==
          Rational(0)))
      bad += 1;
    if (!(to_natural_units(ScaleDim{Rational(0), Rational(0), Rational(1)}) ==
          Rational(-1)))
      bad += 1;
    if (!(to_natural_units(ScaleDim{Rational(-2), Rational(3), Rational(-1)}) ==
          Rational(2)))
      bad += 1;
    sink.push("natural-units", true, bad, 0.0, 0.0,
              "charge, mass and gravitational coupling land on length powers 0, -1, 2");
  }
}

// ----------------------------- suite: ecmd-point ------------------------------

void run_ecmd_point(const Scenario& sc, Sink& sink) {
  {
    ECMDData data;
    data.theta = Tetrad::identity();
    const ECMDTerms terms = ecmd_lagrangian_point(data);
    double measured = std::abs(terms.gravity.value) + std::abs(terms.electromagnetic.value) +
                      std::abs(terms.dirac.value);
    if (!terms.gravity.dim.is_dimensionless()) measured += 1;
    if (!terms.electromagnetic.dim.is_dimensionless()) measured += 1;
    if (!terms.dirac.dim.is_dimensionless()) measured += 1;
    sink.push("flat-vacuum", false, measured, 0.0, 0.0,
              "flat soldering form with vanishing fields gives three dimensionless zeros");
  }

  {
    ECMDData data;
    data.theta = Tetrad::diagonal({2.0, 1.0, 1.0, 1.0});
    data.psi.value = {Cx(1.0, 0.0), Cx(2.0, 0.0), Cx(0.0, 0.0), Cx(1.0, 0.0)};
    data.mass = 3.0;
    const ECMDTerms terms = ecmd_lagrangian_point(data);
    sink.push("dirac-mass-anchor", false, std::abs(terms.dirac.value - (-24.0)), 0.0, 1e-12,
              "constant-spinor mass density is -mass * pairing * determinant = -24");
  }

  {
    ECMDData data;
    data.theta = Tetrad::identity();
    data.dy[2][1] = 1.0;
    data.f[2][1] = 1.0;
    data.f[1][2] = -1.0;
    const ECMDTerms terms = ecmd_lagrangian_point(data);
    sink.push("electromagnetic-anchor", false,
              std::abs(terms.electromagnetic.value - (-0.5)), 0.0, 1e-12,
              "single-entry gradient against its field strength contracts to -1/2");
  }

  {
    ECMDData data;
    data.theta = Tetrad::identity();
    data.grav_coupling = 2.0;
    RealMat4 base{};
    base[0][1] = 1.0;
    base[1][0] = -1.0;
    data.curvature = FiberForm::product_two_form(base, base);
    const ECMDTerms terms = ecmd_lagrangian_point(data);
    sink.push("gravity-anchor", false, std::abs(terms.gravity.value - 2.0), 0.0, 1e-12,
              "plane curvature block contracts to 4 and the coupling halves it");
  }

  {
    // plane waves on the mass shell make the kinetic density vanish
    std::mt19937_64 rng(0x983e5152ee66dfabULL);
    std::uniform_real_distribution<double> mass_dist(0.5, 3.0);
    std::uniform_real_distribution<double> spatial(-2.0, 2.0);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      MassShellPoint pt;
      pt.mass = mass_dist(rng);
      double sq = pt.mass * pt.mass;
      for (int s = 1; s < 4; ++s) {
        pt.p[static_cast<std::size_t>(s)] = spatial(rng);
        sq += pt.p[static_cast<std::size_t>(s)] * pt.p[static_cast<std::size_t>(s)];
      }
      pt.p[0] = std::sqrt(sq);
      const auto [plus, minus] = mass_shell_projectors(pt, WBasis::dirac);
      CxVec4 seed{};
      for (auto& entry : seed) entry = Cx(amp(rng), amp(rng));
      CxVec4 psi{};
      for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col)
          psi[static_cast<std::size_t>(r)] +=
              plus.at(r, col) * seed[static_cast<std::size_t>(col)];
      ECMDData data;
      data.theta = Tetrad::identity();
      data.mass = pt.mass;
      data.psi.value = psi;
      for (int a = 0; a < 4; ++a)
        for (int r = 0; r < 4; ++r)
          data.psi.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)] =
              Cx(0.0, -pt.p[static_cast<std::size_t>(a)]) * psi[static_cast<std::size_t>(r)];
      const ECMDTerms terms = ecmd_lagrangian_point(data);
      worst = std::max(worst, std::abs(terms.dirac.value));
    }
    sink.push("plane-wave-kinetic", false, worst, 0.0, 1e-9,
              "mass-shell plane waves cancel the kinetic density against the mass term");
  }

  sink.guarded(
      "scenario-dimensions", false, 0.0,
      "scenario soldering form and embedded right-handed spinor give dimensionless "
      "densities",
      [&] {
        static const CxMatrix a_inv = to_float(weyl_dirac_change().inverse());
        const CxVec4 weyl{sc.psi.psi_r[0], sc.psi.psi_r[1], Cx(0.0, 0.0), Cx(0.0, 0.0)};
        CxVec4 dirac{};
        for (int r = 0; r < 4; ++r)
          for (int col = 0; col < 4; ++col)
            dirac[static_cast<std::size_t>(r)] +=
                a_inv.at(r, col) * weyl[static_cast<std::size_t>(col)];
        ECMDData data;
        data.theta = sc.tetrad;
        data.mass = sc.mu;
        data.psi.value = dirac;
        const ECMDTerms terms = ecmd_lagrangian_point(data);
        double measured = 0;
        if (!terms.gravity.dim.is_dimensionless()) measured += 1;
        if (!terms.electromagnetic.dim.is_dimensionless()) measured += 1;
        if (!terms.dirac.dim.is_dimensionless()) measured += 1;
        return measured;
      });
}

// ----------------------------- suite: mass-shell ------------------------------

void run_mass_shell(const Scenario&, Sink& sink) {
  {
    MassShellPoint rest;
    rest.p = {1.7, 0.0, 0.0, 0.0};
    rest.mass = 1.7;
    const auto [plus, minus] = mass_shell_projectors(rest, WBasis::dirac);
    CxMatrix want(4);
    want.at(0, 0) = Cx(1.0, 0.0);
    want.at(1, 1) = Cx(1.0, 0.0);
    sink.push("rest-frame-projector", false, (plus - want).max_abs(), 0.0, 1e-12,
              "rest-frame positive projector keeps exactly the two upper components");
    (void)minus;
  }

  std::mt19937_64 rng(0xa831c66d2db43210ULL);
  std::uniform_real_distribution<double> mass_dist(0.5, 3.0);
  std::uniform_real_distribution<double> spatial(-2.0, 2.0);
  const auto draw_point = [&] {
    MassShellPoint pt;
    pt.mass = mass_dist(rng);
    double sq = pt.mass * pt.mass;
    for (int s = 1; s < 4; ++s) {
      pt.p[static_cast<std::size_t>(s)] = spatial(rng);
      sq += pt.p[static_cast<std::size_t>(s)] * pt.p[static_cast<std::size_t>(s)];
    }
    pt.p[0] = std::sqrt(sq);
    return pt;
  };

  {
    double worst = 0;
    const CxMatrix id = CxMatrix::identity(4);
    for (int trial = 0; trial < 150; ++trial) {
      const MassShellPoint pt = draw_point();
      for (const WBasis basis : {WBasis::weyl, WBasis::dirac}) {
        const auto [plus, minus] = mass_shell_projectors(pt, basis);
        worst = std::max(worst, (plus * plus - plus).max_abs());
        worst = std::max(worst, (minus * minus - minus).max_abs());
        worst = std::max(worst, (plus + minus - id).max_abs());
        worst = std::max(worst, (plus * minus).max_abs());
        worst = std::max(worst, std::abs(plus.trace() - Cx(2.0, 0.0)));
        worst = std::max(worst, std::abs(minus.trace() - Cx(2.0, 0.0)));
      }
    }
    sink.push("projector-algebra", false, worst, 0.0, 1e-10,
              "shell projectors are idempotent, complementary and of rank two");
  }

  {
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const MassShellPoint pt = draw_point();
      for (const WBasis basis : {WBasis::weyl, WBasis::dirac}) {
        const CxMatrix slash = gamma_of_vector(pt.p_sharp(), basis);
        const CxMatrix want = (pt.mass * pt.mass) * CxMatrix::identity(4);
        worst = std::max(worst, (slash * slash - want).max_abs());
      }
    }
    sink.push("slash-square", false, worst, 0.0, 1e-9,
              "squared momentum contraction reproduces the squared mass on both bases");
  }

  {
    // the guards must actually fire on off-shell, past-pointing and massless data
    double quiet = 0;
    const auto expect_throw = [&](auto&& call) {
      try {
        call();
        quiet += 1;
      } catch (const OffShell&) {
      } catch (const MasslessShell&) {
      }
    };
    expect_throw([] {
      MassShellPoint pt;
      pt.p = {1.0, 2.0, 0.0, 0.0};
      pt.mass = 1.0;
      pt.validate();
    });
    expect_throw([] {
      MassShellPoint pt;
      pt.p = {1.0, 0.0, 0.0, 0.0};
      pt.mass = -1.0;
      pt.validate();
    });
    expect_throw([] {
      MassShellPoint pt;
      pt.p = {-1.0, 0.0, 0.0, 0.0};
      pt.mass = 1.0;
      pt.validate();
    });
    expect_throw([] {
      MassShellPoint pt;
      pt.p = {1.0, 1.0, 0.0, 0.0};
      pt.mass = 0.0;
      mass_shell_projectors(pt, WBasis::dirac);
    });
    sink.push("shell-gates", false, quiet, 0.0, 0.0,
              "off-shell, past-pointing and massless inputs are rejected");
  }
}

// ------------------------------ scenario parsing ------------------------------

void parse_inputs(const Json& j, Scenario& sc) {
  check_keys(j, "inputs",
             {"theta_w", "mu", "lambda", "phi", "psi", "gauge", "tetrad", "field_dims"});
  if (j.contains("theta_w")) sc.theta_w = get_number(j["theta_w"], "inputs.theta_w");
  if (j.contains("mu")) sc.mu = get_number(j["mu"], "inputs.mu");
  if (j.contains("lambda")) sc.lambda = get_number(j["lambda"], "inputs.lambda");
  if (j.contains("phi")) {
    const Json& arr = get_array(j["phi"], 2, "inputs.phi");
    for (int i = 0; i < 2; ++i)
      sc.phi[static_cast<std::size_t>(i)] =
          get_complex(arr[static_cast<std::size_t>(i)], "inputs.phi entry");
  }
  if (j.contains("psi")) {
    const Json& p = get_object(j["psi"], "inputs.psi");
    check_keys(p, "inputs.psi", {"psi_r", "psi_l", "omega_power_r", "omega_power_l"});
    if (p.contains("psi_r")) {
      const Json& arr = get_array(p["psi_r"], 2, "inputs.psi.psi_r");
      for (int i = 0; i < 2; ++i)
        sc.psi.psi_r[static_cast<std::size_t>(i)] =
            get_complex(arr[static_cast<std::size_t>(i)], "inputs.psi.psi_r entry");
    }
    if (p.contains("psi_l")) {
      const Json& arr = get_array(p["psi_l"], 2, "inputs.psi.psi_l");
      for (int a = 0; a < 2; ++a) {
        const Json& row =
            get_array(arr[static_cast<std::size_t>(a)], 2, "inputs.psi.psi_l row");
        for (int b = 0; b < 2; ++b)
          sc.psi.psi_l[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              get_complex(row[static_cast<std::size_t>(b)], "inputs.psi.psi_l entry");
      }
    }
    if (p.contains("omega_power_r"))
      sc.psi.omega_power_r = get_int(p["omega_power_r"], "inputs.psi.omega_power_r");
    if (p.contains("omega_power_l"))
      sc.psi.omega_power_l = get_int(p["omega_power_l"], "inputs.psi.omega_power_l");
  }
  if (j.contains("gauge")) {
    const Json& g = get_object(j["gauge"], "inputs.gauge");
    check_keys(g, "inputs.gauge", {"A", "Z", "Wp"});
    if (g.contains("A")) {
      const Json& arr = get_array(g["A"], 4, "inputs.gauge.A");
      for (int a = 0; a < 4; ++a)
        sc.gauge.a[static_cast<std::size_t>(a)] =
            get_number(arr[static_cast<std::size_t>(a)], "inputs.gauge.A entry");
    }
    if (g.contains("Z")) {
      const Json& arr = get_array(g["Z"], 4, "inputs.gauge.Z");
      for (int a = 0; a < 4; ++a)
        sc.gauge.z[static_cast<std::size_t>(a)] =
            get_number(arr[static_cast<std::size_t>(a)], "inputs.gauge.Z entry");
    }
    if (g.contains("Wp")) {
      const Json& arr = get_array(g["Wp"], 4, "inputs.gauge.Wp");
      for (int a = 0; a < 4; ++a)
        sc.gauge.wp[static_cast<std::size_t>(a)] =
            get_complex(arr[static_cast<std::size_t>(a)], "inputs.gauge.Wp entry");
    }
  }
  if (j.contains("tetrad")) {
    const Json& arr = get_array(j["tetrad"], 4, "inputs.tetrad");
    for (int l = 0; l < 4; ++l) {
      const Json& row = get_array(arr[static_cast<std::size_t>(l)], 4, "inputs.tetrad row");
      for (int a = 0; a < 4; ++a)
        sc.tetrad.comp[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)] =
            get_number(row[static_cast<std::size_t>(a)], "inputs.tetrad entry");
    }
  }
  if (j.contains("field_dims")) {
    const Json& d = get_object(j["field_dims"], "inputs.field_dims");
    for (const auto& item : d.items()) {
      const Rational power =
          parse_fraction(get_string(item.value(), "inputs.field_dims." + item.key()));
      // scenario overrides speak the pure-length convention
      sc.field_dims[item.key()] = ScaleDim{Rational(0), power, Rational(0)};
    }
  }
}

}  // namespace

// ------------------------------ rational strings ------------------------------

Rational parse_fraction(const std::string& text) {
  const auto bad = [&]() -> Rational {
    throw ParseError("not a rational literal: '" + text + "'");
  };
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) return bad();
  const std::string body = text.substr(first, last - first + 1);
  try {
    const auto slash = body.find('/');
    if (slash == std::string::npos) return Rational(BigInt(body));
    const BigInt num(body.substr(0, slash));
    const BigInt den(body.substr(slash + 1));
    if (den == 0) return bad();
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    return bad();
  }
}

std::string format_fraction(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// ------------------------------- scenario files -------------------------------

std::string default_scenario_text() {
  return R"({
  "schema": 1,
  "name": "default",
  "backend": "exact",
  "tolerance": 1e-12,
  "suites": [
    "fn-identities",
    "spinor-clifford",
    "signatures",
    "gauge-algebra",
    "ew-breaking",
    "lagrangian-audit",
    "ecmd-point",
    "mass-shell"
  ],
  "inputs": {
    "theta_w": 0.6,
    "mu": 1.3,
    "lambda": 0.7,
    "phi": [[0.4, -0.3], [1.1, 0.25]],
    "psi": {
      "psi_r": [[0.3, -0.2], [0.7, 0.1]],
      "psi_l": [[[0.2, 0.1], [-0.4, 0.3]], [[0.5, -0.1], [0.15, 0.05]]],
      "omega_power_r": 1,
      "omega_power_l": 0
    },
    "gauge": {
      "A": [0.3, -0.2, 0.5, 0.1],
      "Z": [1.0, 0.4, -0.3, 0.2],
      "Wp": [[0.25, -0.15], [0.3, 0.2], [-0.1, 0.45], [0.05, -0.3]]
    },
    "tetrad": [
      [1.25, 0.1, 0.0, 0.05],
      [0.02, 1.1, 0.03, 0.0],
      [0.0, 0.04, 0.95, 0.02],
      [0.03, 0.0, 0.01, 1.05]
    ]
  }
}
)";
}

Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  get_object(j, "scenario");
  check_keys(j, "scenario", {"schema", "name", "backend", "tolerance", "suites", "inputs"});
  if (!j.contains("schema")) schema_fail("scenario: missing \"schema\"");
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
    schema_fail("scenario: unsupported schema version");

  Scenario sc;
  if (j.contains("name")) sc.name = get_string(j["name"], "name");
  if (j.contains("backend")) {
    sc.backend = get_string(j["backend"], "backend");
    if (sc.backend != "exact" && sc.backend != "float")
      schema_fail("backend must be \"exact\" or \"float\"");
  }
  if (j.contains("tolerance")) {
    sc.tolerance = get_number(j["tolerance"], "tolerance");
    if (!(sc.tolerance > 0)) schema_fail("tolerance must be positive");
  }
  if (j.contains("suites")) {
    if (!j["suites"].is_array()) schema_fail("suites must be an array of names");
    for (const Json& entry : j["suites"]) sc.suites.push_back(get_string(entry, "suite name"));
  }
  if (j.contains("inputs")) parse_inputs(get_object(j["inputs"], "inputs"), sc);
  sc.gauge.theta_w = sc.theta_w;
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

// ---------------------------------- running -----------------------------------

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "fn-identities", "spinor-clifford", "signatures",  "gauge-algebra",
      "ew-breaking",   "lagrangian-audit", "ecmd-point", "mass-shell"};
  return names;
}

int Report::failed_count() const {
  int failed = 0;
  for (const CheckRecord& c : checks)
    if (!c.passed) ++failed;
  return failed;
}

Report run_suites(const Scenario& sc) {
  Report report;
  report.scenario = sc.name;
  std::vector<std::string> order = sc.suites.empty() ? known_suites() : sc.suites;
  std::set<std::string> seen;
  for (const std::string& name : order) {
    if (!seen.insert(name).second) continue;  // run each suite once
    Sink sink{sc, report, name};
    if (name == "fn-identities")
      run_fn_identities(sc, sink);
    else if (name == "spinor-clifford")
      run_spinor_clifford(sc, sink);
    else if (name == "signatures")
      run_signatures(sc, sink);
    else if (name == "gauge-algebra")
      run_gauge_algebra(sc, sink);
    else if (name == "ew-breaking")
      run_ew_breaking(sc, sink);
    else if (name == "lagrangian-audit")
      run_lagrangian_audit(sc, sink);
    else if (name == "ecmd-point")
      run_ecmd_point(sc, sink);
    else if (name == "mass-shell")
      run_mass_shell(sc, sink);
    else
      throw UnknownSuite("unknown suite '" + name + "'");
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

void require_clean(const Report& report) {
  const int failed = report.failed_count();
  if (failed == 0) return;
  std::string first;
  for (const CheckRecord& c : report.checks)
    if (!c.passed) {
      first = c.id;
      break;
    }
  throw CheckFailure(std::to_string(failed) + " check(s) failed; first failure: " + first);
}

// --------------------------------- reporting ----------------------------------

nlohmann::ordered_json report_json(const Report& report) {
  Json j;
  j["schema"] = 1;
  j["scenario"] = report.scenario;
  Json checks = Json::array();
  for (const CheckRecord& c : report.checks) {
    Json entry;
    entry["id"] = c.id;
    entry["suite"] = c.suite;
    entry["backend"] = c.backend;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["measured"] = c.measured;
    entry["expected"] = c.expected;
    entry["tolerance"] = c.tolerance;
    entry["anchor"] = c.anchor;
    checks.push_back(entry);
  }
  j["checks"] = checks;
  j["total"] = static_cast<int>(report.checks.size());
  j["failed"] = report.failed_count();
  return j;
}

std::string report_text(const Report& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  char line[512];
  for (const CheckRecord& c : report.checks) {
    std::snprintf(line, sizeof(line),
                  "%s  %-42s [%s] measured=%.6g expected=%.6g tol=%.6g\n",
                  c.passed ? "PASS" : "FAIL", c.id.c_str(), c.backend.c_str(), c.measured,
                  c.expected, c.tolerance);
    out << line;
    out << "      " << c.anchor << "\n";
  }
  out << report.checks.size() << " checks, " << report.failed_count() << " failed\n";
  return out.str();
}

// -------------------------------- evaluation ----------------------------------

nlohmann::ordered_json evaluate_point(const Scenario& sc) {
  Json out;
  out["schema"] = 1;
  out["name"] = sc.name;

  EWPointData data;
  data.theta = sc.tetrad;
  data.psi.value = sc.psi;
  data.phi.value = HiggsValue{sc.phi, sc.mu, sc.lambda, -1};
  data.mass = sc.mu;
  data.lambda = sc.lambda;
  const EWTerms terms = ew_lagrangian_point(data);
  Json table;
  table["fermion"] = scaled_json(terms.psi);
  table["scalar"] = scaled_json(terms.phi);
  table["gauge"] = scaled_json(terms.gauge);
  table["interaction"] = scaled_json(terms.interaction);
  out["terms"] = table;

  HiggsValue hv{sc.phi, sc.mu, sc.lambda, -1};
  Json higgs;
  higgs["norm_squared"] = scaled_json(hv.norm_squared());
  higgs["potential"] = scaled_json(higgs_potential(hv));
  higgs["stationary_norm_squared"] = scaled_json(potential_stationary(hv));
  try {
    higgs["radial_offset"] = scaled_json(higgs_polar(hv).f);
  } catch (const ZeroHiggs&) {
    higgs["radial_offset"] = nullptr;
  }
  out["higgs"] = higgs;

  const IsospinFrame frame;
  const CxMatrix w = assemble_w(sc.gauge, frame);
  const auto trace = hat_w(w, frame);
  Json trace_json = Json::array();
  for (const Cx& entry : trace) trace_json.push_back(complex_json(entry));
  out["gauge_trace"] = trace_json;

  std::map<std::string, ScaleDim> dims = standard_field_dims();
  for (const auto& [name, dim] : sc.field_dims) dims[name] = dim;
  Json audit = Json::array();
  const auto append = [&](const std::string& prefix,
                          const std::vector<TermDescriptor>& descriptors) {
    for (const AuditEntry& entry : conformal_weight_audit(descriptors, dims)) {
      Json row;
      row["term"] = prefix + "/" + entry.label;
      row["balanced"] = entry.balanced;
      row["dim"] = dim_json(entry.total);
      audit.push_back(row);
    }
  };
  append("ew", ew_term_descriptors());
  append("ecmd", ecmd_term_descriptors());
  append("dilaton", {dilaton_term_descriptor()});
  out["audit"] = audit;
  return out;
}

// ----------------------------------- dumps ------------------------------------

nlohmann::ordered_json dump_table(const std::string& kind) {
  Json out;
  out["schema"] = 1;
  out["kind"] = kind;
  const TwoSpinorFrame frame;
  if (kind == "gamma-weyl" || kind == "gamma-dirac") {
    const WBasis basis = kind == "gamma-weyl" ? WBasis::weyl : WBasis::dirac;
    Json mats = Json::array();
    for (int l = 0; l < 4; ++l)
      mats.push_back(matrix_json(to_float(gamma_matrix(l, basis, frame))));
    out["matrices"] = mats;
  } else if (kind == "iota-frame") {
    const auto iota = iota_frame(IsospinFrame{});
    Json mats = Json::array();
    for (const CxMatrix& m : iota) mats.push_back(matrix_json(m));
    out["matrices"] = mats;
  } else if (kind == "structure-constants-su2") {
    const auto sigma = sigma_matrices();
    std::vector<ExactMatrix> gens = {ExactComplex::i() * sigma[1],
                                     ExactComplex::i() * sigma[2],
                                     ExactComplex::i() * sigma[3]};
    const auto c = structure_constants(orthonormalize(gens));
    Json table = Json::array();
    for (int h = 0; h < 3; ++h) {
      Json plane = Json::array();
      for (int j = 0; j < 3; ++j) {
        Json row = Json::array();
        for (int k = 0; k < 3; ++k)
          row.push_back(complex_json(c[static_cast<std::size_t>(h)][static_cast<std::size_t>(
              j)][static_cast<std::size_t>(k)]
                                         .to_complex()));
        plane.push_back(row);
      }
      table.push_back(plane);
    }
    out["constants"] = table;
  } else {
    throw UnknownKind("unknown dump kind '" + kind + "'");
  }
  return out;
}

}  // namespace ewgeom

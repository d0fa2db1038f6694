#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ewgeom/fnforms.hpp"

using namespace ewgeom;

namespace {

// ----------------------------- random instances -----------------------------

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  int n = num(rng);
  if (n == 0) n = 1;
  return Rational(n, den(rng));
}

// sparse polynomial: up to max_terms monomials, exponents <= 2, optional i
Poly random_poly(int nvars, std::mt19937_64& rng, int first_var, int last_var,
                 int max_terms = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> var(first_var, last_var - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  Poly p(nvars);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var(rng))] = expo(rng);
    ExactComplex c(random_rational(rng));
    if (coin(rng) == 0) c = c * ExactComplex::i();
    p.add_term(e, c);
  }
  return p;
}

// sparse tangent-valued form with a few nonzero components anywhere
TVForm random_tvform(const Chart& chart, int degree, std::mt19937_64& rng, int entries = 3) {
  TVForm out(chart, degree);
  const auto tuples = increasing_tuples(chart.total_dim(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  std::uniform_int_distribution<int> val(0, chart.total_dim() - 1);
  for (int e = 0; e < entries; ++e)
    out.set(tuples[pick(rng)], val(rng),
            random_poly(chart.total_dim(), rng, 0, chart.total_dim()));
  return out;
}

// basic form whose base-direction values are base functions and whose
// fiber-direction values may involve the fiber coordinates
TVForm random_projectable(const Chart& chart, int degree, std::mt19937_64& rng,
                          bool linear, int entries = 3) {
  TVForm out(chart, degree);
  const int n = chart.base_dim, total = chart.total_dim();
  const auto tuples = increasing_tuples(n, degree);  // base directions only
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  std::uniform_int_distribution<int> val(0, total - 1);
  std::uniform_int_distribution<int> fiber_var(n, total - 1);
  for (int e = 0; e < entries; ++e) {
    const int b = val(rng);
    Poly p = random_poly(total, rng, 0, n);
    if (b >= n) {
      if (linear)
        p = p * Poly::variable(total, fiber_var(rng));
      else
        p = p * random_poly(total, rng, n, total);
    }
    out.set(tuples[pick(rng)], b, p);
  }
  return out;
}

ScalarForm random_scalar_form(const Chart& chart, int degree, std::mt19937_64& rng,
                              int entries = 2) {
  ScalarForm out(chart, degree);
  const auto tuples = increasing_tuples(chart.total_dim(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  for (int e = 0; e < entries; ++e)
    out.set(tuples[pick(rng)], random_poly(chart.total_dim(), rng, 0, chart.total_dim()));
  return out;
}

std::vector<PolyMatrix> random_linear_coefficients(const Chart& chart, std::mt19937_64& rng) {
  std::vector<PolyMatrix> mats;
  for (int a = 0; a < chart.base_dim; ++a) {
    PolyMatrix m(chart.fiber_dim, chart.total_dim());
    for (int i = 0; i < chart.fiber_dim; ++i)
      for (int j = 0; j < chart.fiber_dim; ++j)
        m.at(i, j) = random_poly(chart.total_dim(), rng, 0, chart.base_dim);
    mats.push_back(m);
  }
  return mats;
}

// product of elementary shears: determinant is exactly one
PolyMatrix random_unimodular(const Chart& chart, std::mt19937_64& rng) {
  const int k = chart.fiber_dim, total = chart.total_dim();
  PolyMatrix s = PolyMatrix::identity(k, total);
  std::uniform_int_distribution<int> row(0, k - 1);
  for (int step = 0; step < 3; ++step) {
    int i = row(rng), j = row(rng);
    if (i == j) j = (j + 1) % k;
    PolyMatrix shear = PolyMatrix::identity(k, total);
    shear.at(i, j) = random_poly(total, rng, 0, chart.base_dim);
    s = s * shear;
  }
  return s;
}

Poly scalar(const Chart& chart, int value) {
  return Poly::constant(chart.total_dim(), ExactComplex(value));
}

// independent oracle: classical Lie bracket of vector fields,
// [u,v]^b = u^c d_c v^b - v^c d_c u^b
TVForm lie_bracket_oracle(const TVForm& u, const TVForm& v) {
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

// independent oracle: the curvature coefficient matrix of a linear connection,
// R_ab = d_b Gamma_a - d_a Gamma_b + Gamma_a Gamma_b - Gamma_b Gamma_a
PolyMatrix curvature_matrix_oracle(const std::vector<PolyMatrix>& gammas, int a, int b) {
  const PolyMatrix& ga = gammas[static_cast<std::size_t>(a)];
  const PolyMatrix& gb = gammas[static_cast<std::size_t>(b)];
  return ga.partial(b) - gb.partial(a) + ga * gb - gb * ga;
}

}  // namespace

TEST_CASE("polynomial arithmetic, literals and matrices behave like the ring") {
  const Chart chart(2, 1);
  const auto names = chart.names();
  REQUIRE(names == std::vector<std::string>{"x1", "x2", "y1"});

  const Poly p = parse_poly("3/2 x1^2 y1 - x2", names);
  Poly expected(3);
  expected.add_term({2, 0, 1}, ExactComplex(Rational(3, 2)));
  expected.add_term({0, 1, 0}, ExactComplex(-1));
  CHECK(p == expected);
  CHECK(p.eval({ExactComplex(2), ExactComplex(1), ExactComplex(3)}) == ExactComplex(17));
  CHECK(p.partial(0) == parse_poly("3 x1 y1", names));
  CHECK(p.partial(2) == parse_poly("3/2 x1^2", names));

  // printing and reparsing is the identity, including non-rational scalars
  const Poly q = parse_poly("(1+i) x1 x2 - 1/2*i*sqrt2 y1^2 + 2", names);
  CHECK(parse_poly(format_poly(q, names), names) == q);
  CHECK(parse_poly(format_poly(p, names), names) == p);
  CHECK(format_poly(Poly(3), names) == "0");

  // substitution: replace y1 by x1 + 1 in x1 + y1^2
  const Poly r = parse_poly("x1 + y1^2", names);
  const std::vector<Poly> repl = {Poly::variable(3, 0), Poly::variable(3, 1),
                                  parse_poly("x1 + 1", names)};
  CHECK(r.substitute(repl) == parse_poly("x1^2 + 3 x1 + 1", names));

  CHECK_THROWS_AS(parse_poly("x1 + z9", names), ParseError);
  CHECK_THROWS_AS(parse_poly("", names), ParseError);

  // matrix algebra over the ring: A adj(A) = det(A) I
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = random_poly(3, rng, 0, 3, 1);
    PolyMatrix prod = a * a.adjugate();
    PolyMatrix expected_prod = a.det() * PolyMatrix::identity(3, 3);
    CHECK(prod == expected_prod);
  }
  const PolyMatrix shear = [&] {
    PolyMatrix s = PolyMatrix::identity(2, 3);
    s.at(0, 1) = Poly::variable(3, 0);
    return s;
  }();
  CHECK(shear.det() == parse_poly("1", names));
}

TEST_CASE("degree-0 bracket is the classical Lie bracket of vector fields") {
  const Chart chart(1, 1);  // directions: x1 (base), y1 (fiber)
  const int total = chart.total_dim();

  // u = x dy, v = y dx
  TVForm u(chart, 0), v(chart, 0);
  u.set({}, 1, Poly::variable(total, 0));
  v.set({}, 0, Poly::variable(total, 1));
  const TVForm w = fn_bracket(u, v);
  CHECK(w.component({}, 0) == Poly::variable(total, 0));
  CHECK(w.component({}, 1) == -Poly::variable(total, 1));
  CHECK(w == lie_bracket_oracle(u, v));

  std::mt19937_64 rng(0xd1b54a32d192ed03ULL);
  const Chart big(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const TVForm a = random_tvform(big, 0, rng);
    const TVForm b = random_tvform(big, 0, rng);
    CHECK(fn_bracket(a, b) == lie_bracket_oracle(a, b));
    CHECK(fn_bracket(a, a).is_zero());
  }
}

TEST_CASE("bracket is graded antisymmetric across degrees") {
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  const struct {
    int n, k, r, s;
  } cases[] = {{2, 1, 0, 0}, {2, 1, 0, 1}, {2, 2, 1, 1}, {3, 1, 1, 2}, {4, 1, 2, 2}};
  for (const auto& c : cases) {
    const Chart chart(c.n, c.k);
    for (int trial = 0; trial < 4; ++trial) {
      const TVForm phi = random_tvform(chart, c.r, rng);
      const TVForm psi = random_tvform(chart, c.s, rng);
      const int sign = (c.r * c.s) % 2 == 0 ? -1 : 1;
      CHECK(fn_bracket(phi, psi) == scalar(chart, sign) * fn_bracket(psi, phi));
    }
  }
}

TEST_CASE("bracket satisfies the graded Jacobi identity") {
  std::mt19937_64 rng(0x94d049bb133111ebULL);
  const struct {
    int n, k, r, s, t;
  } cases[] = {{2, 1, 0, 0, 0}, {2, 1, 1, 0, 0}, {3, 1, 1, 1, 0}, {3, 1, 1, 1, 1}};
  for (const auto& c : cases) {
    const Chart chart(c.n, c.k);
    for (int trial = 0; trial < 3; ++trial) {
      const TVForm phi = random_tvform(chart, c.r, rng, 2);
      const TVForm psi = random_tvform(chart, c.s, rng, 2);
      const TVForm theta = random_tvform(chart, c.t, rng, 2);
      auto sgn = [&](int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; };
      const TVForm total =
          scalar(chart, sgn(c.r, c.t)) * fn_bracket(fn_bracket(phi, psi), theta) +
          scalar(chart, sgn(c.s, c.r)) * fn_bracket(fn_bracket(psi, theta), phi) +
          scalar(chart, sgn(c.t, c.s)) * fn_bracket(fn_bracket(theta, phi), psi);
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("decomposable brackets match the coordinate-free characterization") {
  // hand-computed anchor: phi = f dx1 (x) d_x1, psi = g dx2 (x) d_x2 with
  // f = x2^2, g = x1 x2 gives components (1/2) f d1 g along d_x2 and
  // -(1/2) g d2 f along d_x1 at the (x1,x2) slot
  const Chart small(2, 1);
  const auto names = small.names();
  {
    ScalarForm alpha(small, 1), beta(small, 1);
    alpha.set({0}, parse_poly("x2^2", names));
    beta.set({1}, parse_poly("x1 x2", names));
    TVForm u(small, 0), v(small, 0);
    u.set({}, 0, parse_poly("1", names));
    v.set({}, 1, parse_poly("1", names));
    const TVForm w = fn_bracket(tv_from(alpha, u), tv_from(beta, v));
    CHECK(w.component({0, 1}, 1) == parse_poly("1/2 x2^3", names));
    CHECK(w.component({0, 1}, 0) == parse_poly("-x1 x2^2", names));
    CHECK(w.component({0, 1}, 2) == Poly(3));
  }

  std::mt19937_64 rng(0xbf58476d1ce4e5b9ULL);
  const Chart chart(4, 1);
  const struct {
    int r, s;
  } cases[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (const auto& c : cases) {
    for (int trial = 0; trial < 3; ++trial) {
      const ScalarForm alpha = random_scalar_form(chart, c.r, rng);
      const ScalarForm beta = random_scalar_form(chart, c.s, rng);
      const TVForm u = random_tvform(chart, 0, rng, 2);
      const TVForm v = random_tvform(chart, 0, rng, 2);
      const TVForm lhs = fn_bracket(tv_from(alpha, u), tv_from(beta, v));
      const Poly sgn = scalar(chart, c.r % 2 == 0 ? 1 : -1);
      const TVForm rhs =
          tv_from(wedge(alpha, beta), fn_bracket(u, v)) +
          tv_from(wedge(alpha, lie_derivative(u, beta)), v) -
          tv_from(wedge(lie_derivative(v, alpha), beta), u) +
          sgn * tv_from(wedge(interior(v, alpha), exterior_differential(beta)), u) +
          sgn * tv_from(wedge(exterior_differential(alpha), interior(u, beta)), v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("projectable and linear forms are closed under the bracket") {
  std::mt19937_64 rng(0x7f4a7c159e3779b9ULL);
  const Chart chart(3, 2);
  for (int trial = 0; trial < 6; ++trial) {
    const TVForm p1 = random_projectable(chart, 1, rng, false);
    const TVForm p2 = random_projectable(chart, trial % 2, rng, false);
    REQUIRE(p1.is_projectable());
    REQUIRE(p2.is_projectable());
    CHECK(fn_bracket(p1, p2).is_projectable());

    const TVForm l1 = random_projectable(chart, 1, rng, true);
    const TVForm l2 = random_projectable(chart, trial % 2, rng, true);
    REQUIRE(l1.is_linear());
    REQUIRE(l2.is_linear());
    CHECK(fn_bracket(l1, l2).is_linear());
  }

  // flags discriminate
  TVForm vertical_index(chart, 1);
  vertical_index.set({3}, 3, Poly::constant(chart.total_dim(), ExactComplex(1)));
  CHECK_FALSE(vertical_index.is_basic());
  TVForm y_dependent(chart, 1);
  y_dependent.set({0}, 0, Poly::variable(chart.total_dim(), 3));
  CHECK(y_dependent.is_basic());
  CHECK_FALSE(y_dependent.is_projectable());

  const Chart other(2, 2);
  CHECK_THROWS_AS(fn_bracket(TVForm(chart, 1), TVForm(other, 1)), ChartMismatch);
  CHECK_THROWS_AS(fn_bracket(TVForm(other, 1), TVForm(other, 2)), DegreeMismatch);
}

TEST_CASE("curvature: flat, line-bundle and random linear connections") {
  // flat coordinate connection
  const Chart chart(2, 1);
  CHECK(curvature(Connection(chart)).is_zero());

  // line bundle over the plane with potential (0, x1): single curvature
  // component equal to minus one times the fiber coordinate
  const auto names = chart.names();
  Connection line(chart, {{Poly(3)}, {parse_poly("x1 y1", names)}});
  const TVForm r = curvature(line);
  CHECK(r.is_basic());
  CHECK(r.is_vertical_valued());
  CHECK(r.component({0, 1}, 2) == parse_poly("-y1", names));
  CHECK(curvature_matrices(line)[0][1].at(0, 0) == parse_poly("-1", names));

  // the bracket-defined curvature of a linear connection agrees with the
  // first-order closed form everywhere
  std::mt19937_64 rng(0x5851f42d4c957f2dULL);
  const struct {
    int n, k;
  } charts[] = {{2, 1}, {2, 2}, {3, 2}, {4, 2}};
  for (const auto& ck : charts) {
    const Chart c(ck.n, ck.k);
    for (int trial = 0; trial < 4; ++trial) {
      const auto gammas = random_linear_coefficients(c, rng);
      const Connection g = Connection::linear(c, gammas);
      REQUIRE(g.is_linear());
      const TVForm r2 = curvature(g);
      CHECK(r2.is_basic());
      CHECK(r2.is_vertical_valued());
      CHECK(r2.is_linear());
      for (int a = 0; a < c.base_dim; ++a)
        for (int b = a + 1; b < c.base_dim; ++b) {
          const PolyMatrix oracle = curvature_matrix_oracle(gammas, a, b);
          for (int i = 0; i < c.fiber_dim; ++i) {
            Poly expected(c.total_dim());
            for (int j = 0; j < c.fiber_dim; ++j)
              expected = expected + oracle.at(i, j) * Poly::variable(c.total_dim(),
                                                                     c.base_dim + j);
            CHECK(r2.component({a, b}, c.base_dim + i) == expected);
          }
        }
    }
  }
}

TEST_CASE("covariant differentials of explicit sections") {
  const Chart chart(2, 1);
  const auto names = chart.names();

  // flat connection: the covariant differential is the plain differential
  const Connection flat(chart);
  const auto grad = covariant_differential(flat, {parse_poly("x1 x2", names)});
  CHECK(grad[0][0] == parse_poly("x2", names));
  CHECK(grad[1][0] == parse_poly("x1", names));

  // constant section against a coefficient concentrated along x1
  Connection g(chart, {{parse_poly("y1", names)}, {Poly(3)}});
  const auto nabla = covariant_differential(g, {parse_poly("1", names)});
  CHECK(nabla[0][0] == parse_poly("-1", names));
  CHECK(nabla[1][0] == parse_poly("0", names));

  // constant sections of the flat connection are covariantly constant
  const auto zero = covariant_differential(flat, {parse_poly("5/7", names)});
  CHECK(zero[0][0].is_zero());
  CHECK(zero[1][0].is_zero());

  CHECK_THROWS_AS(covariant_differential(flat, {parse_poly("y1", names)}), ShapeMismatch);
  CHECK_THROWS_AS(covariant_differential(flat, std::vector<Poly>{}), ShapeMismatch);
}

TEST_CASE("frame changes preserve flatness and conjugate the curvature") {
  const Chart chart(2, 2);
  const auto names = chart.names();
  const int total = chart.total_dim();

  // identity frame change fixes the connection
  std::mt19937_64 rng(0x14057b7ef767814fULL);
  const Connection g0 = Connection::linear(chart, random_linear_coefficients(chart, rng));
  CHECK(gauge_transform(g0, PolyMatrix::identity(2, total)) == g0);

  // worked shear example from the flat connection
  PolyMatrix shear = PolyMatrix::identity(2, total);
  shear.at(0, 1) = Poly::variable(total, 0);
  const Connection sheared = gauge_transform(Connection(chart), shear);
  PolyMatrix expected1(2, total);
  expected1.at(0, 1) = Poly::constant(total, ExactComplex(1));
  CHECK(sheared.coefficient_matrix(0) == expected1);
  CHECK(sheared.coefficient_matrix(1) == PolyMatrix(2, total));
  CHECK(curvature(sheared).is_zero());

  // conjugation law on random linear connections
  for (int trial = 0; trial < 4; ++trial) {
    const Connection g = Connection::linear(chart, random_linear_coefficients(chart, rng));
    const PolyMatrix s = random_unimodular(chart, rng);
    const Connection gt = gauge_transform(g, s);
    const Poly det = s.det();
    REQUIRE(det.is_constant());
    const PolyMatrix s_inv =
        Poly::constant(total, det.constant_value().inverse()) * s.adjugate();
    const auto r = curvature_matrices(g);
    const auto rt = curvature_matrices(gt);
    for (int a = 0; a < chart.base_dim; ++a)
      for (int b = 0; b < chart.base_dim; ++b)
        CHECK(rt[a][b] == s * r[a][b] * s_inv);
  }

  // determinant gates
  PolyMatrix bad(2, total);
  bad.at(0, 0) = Poly::constant(total, ExactComplex(1));
  bad.at(1, 1) = Poly::variable(total, 0);
  CHECK_THROWS_AS(gauge_transform(Connection(chart), bad), NonConstantDeterminant);
  PolyMatrix singular(2, total);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) singular.at(i, j) = Poly::constant(total, ExactComplex(1));
  CHECK_THROWS_AS(gauge_transform(Connection(chart), singular), NonConstantDeterminant);
}

TEST_CASE("difference tensors reconstruct and obey the curvature identity") {
  const Chart chart(3, 2);
  std::mt19937_64 rng(0xda3e39cb94b95bdbULL);

  // gamma = gamma0 gives the zero tensor
  const Connection same = Connection::linear(chart, random_linear_coefficients(chart, rng));
  CHECK(decompose_alpha(same, same).is_zero());

  for (int trial = 0; trial < 4; ++trial) {
    // flat reference: frame change of the coordinate connection
    const Connection g0 = gauge_transform(Connection(chart), random_unimodular(chart, rng));
    REQUIRE(curvature(g0).is_zero());
    const Connection g = Connection::linear(chart, random_linear_coefficients(chart, rng));

    const TVForm alpha = decompose_alpha(g, g0);
    CHECK(alpha.degree() == 1);
    CHECK(alpha.is_basic());
    CHECK(alpha.is_vertical_valued());
    CHECK(reconstruct(g0, alpha) == g);

    // R[gamma] = -2 [gamma0, alpha] - [alpha, alpha] against the flat reference
    const TVForm g0_form = g0.as_tvform();
    const TVForm rhs = scalar(chart, -2) * fn_bracket(g0_form, alpha) -
                       fn_bracket(alpha, alpha);
    CHECK(curvature(g) == rhs);
  }

  // with the coordinate reference the identity collapses to the definition
  const Connection flat(chart);
  const Connection g = Connection::linear(chart, random_linear_coefficients(chart, rng));
  const TVForm alpha = decompose_alpha(g, flat);
  const TVForm rhs = scalar(chart, -2) * fn_bracket(flat.as_tvform(), alpha) -
                     fn_bracket(alpha, alpha);
  CHECK(curvature(g) == rhs);
}

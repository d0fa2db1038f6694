#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ewgeom/twospinor.hpp"

using namespace ewgeom;

namespace {

ExactComplex random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const auto q = [&] { return Rational(num(rng), den(rng)); };
  return ExactComplex(GaussianRational(q(), q()), GaussianRational(q(), q()));
}

Spinor random_spinor(std::mt19937_64& rng) { return {random_scalar(rng), random_scalar(rng)}; }

DiracSpinor random_dirac(std::mt19937_64& rng) {
  DiracSpinor psi;
  psi.u = random_spinor(rng);
  psi.chi = {random_scalar(rng), random_scalar(rng)};
  return psi;
}

ExactMatrix random_2x2(std::mt19937_64& rng) {
  ExactMatrix m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = random_scalar(rng);
  return m;
}

const std::array<ExactComplex, 4> kPhases = {ExactComplex(1), ExactComplex(-1),
                                             ExactComplex::i(),
                                             ExactComplex(-1) * ExactComplex::i()};

// independent transcription of g via the epsilon contraction
ExactComplex metric_by_epsilons(const ExactMatrix& x, const ExactMatrix& y,
                                const ExactComplex& phase) {
  const auto eps = [&](int a, int b) -> ExactComplex {
    if (a == b) return ExactComplex(0);
    return (a == 0) ? phase : ExactComplex(-1) * phase;
  };
  ExactComplex s(0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ad = 0; ad < 2; ++ad)
        for (int bd = 0; bd < 2; ++bd)
          s = s + eps(a, b) * eps(ad, bd).conj() * x.at(a, ad) * y.at(b, bd);
  return s;
}

}  // namespace

TEST_CASE("epsilon flat and sharp follow the fixed convention") {
  TwoSpinorFrame frame;
  const Spinor u{ExactComplex(1), ExactComplex(0)};
  const CoSpinor flat = eps_flat(u, frame);
  CHECK(flat[0] == ExactComplex(0));
  CHECK(flat[1] == ExactComplex(1));
  const Spinor zero{ExactComplex(0), ExactComplex(0)};
  CHECK(eps_flat(zero, frame) == CoSpinor{ExactComplex(0), ExactComplex(0)});

  std::mt19937_64 rng(21);
  for (const ExactComplex& phase : kPhases) {
    TwoSpinorFrame f{phase, "test"};
    for (int trial = 0; trial < 25; ++trial) {
      const Spinor v = random_spinor(rng);
      const Spinor round = eps_sharp(eps_flat(v, f), f);
      CHECK(round[0] == ExactComplex(-1) * v[0]);  // sharp after flat is -id
      CHECK(round[1] == ExactComplex(-1) * v[1]);
      const CoSpinor l{random_scalar(rng), random_scalar(rng)};
      const CoSpinor back = eps_flat(eps_sharp(l, f), f);
      CHECK(back[0] == ExactComplex(-1) * l[0]);
      CHECK(back[1] == ExactComplex(-1) * l[1]);
    }
  }

  TwoSpinorFrame bad{ExactComplex(2), "bad"};
  CHECK_THROWS_AS(eps_flat(u, bad), NonOrthonormalFrame);
}

TEST_CASE("the polarized determinant is the epsilon-contraction metric") {
  CHECK(spinor_metric(ExactMatrix::identity(2), ExactMatrix::identity(2)) == ExactComplex(2));

  // decomposable (rank <= 1) elements are exactly the null ones
  ExactMatrix w(2);
  w.at(0, 0) = ExactComplex(1);  // u (x) ubar with u = (1,0)
  CHECK(spinor_metric(w, w) == ExactComplex(0));

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactMatrix x = random_2x2(rng);
    const ExactMatrix y = random_2x2(rng);
    CHECK(spinor_metric(x, y) == spinor_metric(y, x));
    CHECK(spinor_metric(x, x) == ExactComplex(2) * x.det());
    for (const ExactComplex& phase : kPhases)
      CHECK(spinor_metric(x, y) == metric_by_epsilons(x, y, phase));
    // nullity <=> decomposability
    const Spinor p = random_spinor(rng);
    const Spinor q = random_spinor(rng);
    ExactMatrix dec(2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        dec.at(a, b) = p[static_cast<std::size_t>(a)] * q[static_cast<std::size_t>(b)];
    CHECK(spinor_metric(dec, dec) == ExactComplex(0));
    if (!x.det().is_zero()) CHECK(!spinor_metric(x, x).is_zero());
  }

  // g is real on Hermitian vectors
  for (int trial = 0; trial < 200; ++trial) {
    const ExactMatrix m = random_2x2(rng);
    const ExactMatrix h = m + m.dagger();
    const ExactComplex g = spinor_metric(h, h);
    CHECK(g.a.im == 0);
    CHECK(g.b.im == 0);
  }
}

TEST_CASE("Pauli vectors are Hermitian and orthonormal") {
  TwoSpinorFrame frame;
  const auto tau = pauli_basis(frame);
  CHECK(tau[0] == ExactComplex::inv_sqrt2() * ExactMatrix::identity(2));
  ExactMatrix d3(2);
  d3.at(0, 0) = ExactComplex::inv_sqrt2();
  d3.at(1, 1) = ExactComplex(-1) * ExactComplex::inv_sqrt2();
  CHECK(tau[3] == d3);
  for (int l = 0; l < 4; ++l) {
    CHECK(tau[static_cast<std::size_t>(l)].is_hermitian());
    for (int m = 0; m < 4; ++m)
      CHECK(spinor_metric(tau[static_cast<std::size_t>(l)], tau[static_cast<std::size_t>(m)]) ==
            eta_coeff(l, m));
  }
}

TEST_CASE("the Clifford map satisfies its defining decomposable rule") {
  std::mt19937_64 rng(23);
  for (const ExactComplex& phase : kPhases) {
    TwoSpinorFrame f{phase, "test"};
    for (int trial = 0; trial < 20; ++trial) {
      const Spinor p = random_spinor(rng);
      const Spinor qbar = random_spinor(rng);
      ExactMatrix y(2);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          y.at(a, b) = p[static_cast<std::size_t>(a)] * qbar[static_cast<std::size_t>(b)];
      const DiracSpinor psi = random_dirac(rng);

      // gamma(p (x) qbar)(u, chi) = sqrt2 (<chi,qbar> p, <p flat, u> qbar flat)
      const ExactComplex pair_chi_q = psi.chi[0] * qbar[0] + psi.chi[1] * qbar[1];
      const CoSpinor pflat = eps_flat(p, f);
      const ExactComplex pair_p_u = pflat[0] * psi.u[0] + pflat[1] * psi.u[1];
      const CoSpinor qflat = eps_bar_flat(qbar, f);
      DiracSpinor expect;
      const ExactComplex r2 = ExactComplex::sqrt2();
      expect.u = {r2 * pair_chi_q * p[0], r2 * pair_chi_q * p[1]};
      expect.chi = {r2 * pair_p_u * qflat[0], r2 * pair_p_u * qflat[1]};

      const ExactMatrix g = dirac_map(y, f);
      const Wvec in = weyl_components(psi);
      Wvec out{ExactComplex(0), ExactComplex(0), ExactComplex(0), ExactComplex(0)};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          out[static_cast<std::size_t>(i)] =
              out[static_cast<std::size_t>(i)] + g.at(i, j) * in[static_cast<std::size_t>(j)];
      CHECK(out == weyl_components(expect));
    }
  }
}

TEST_CASE("gamma matrices obey the Clifford relation exactly") {
  TwoSpinorFrame frame;
  const auto tau = pauli_basis(frame);
  const ExactMatrix id4 = ExactMatrix::identity(4);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      const ExactMatrix gl = dirac_map(tau[static_cast<std::size_t>(l)], frame);
      const ExactMatrix gm = dirac_map(tau[static_cast<std::size_t>(m)], frame);
      CHECK(gl * gm + gm * gl == ExactComplex(2) * eta_coeff(l, m) * id4);
    }
  CHECK(dirac_map(tau[0], frame) * dirac_map(tau[0], frame) == id4);
  const ExactMatrix g1 = dirac_map(tau[1], frame);
  const ExactMatrix g2 = dirac_map(tau[2], frame);
  CHECK((g1 * g2 + g2 * g1).is_zero());

  // linearity in the argument
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix x = random_2x2(rng);
    const ExactMatrix y = random_2x2(rng);
    const ExactComplex z = random_scalar(rng);
    CHECK(dirac_map(x + z * y, frame) == dirac_map(x, frame) + z * dirac_map(y, frame));
  }
}

TEST_CASE("gamma tables in the Weyl and Dirac component bases") {
  TwoSpinorFrame frame;
  const auto sigma = sigma_matrices();
  for (int l = 0; l < 4; ++l) {
    const ExactMatrix gw = gamma_matrix(l, WBasis::weyl, frame);
    // blocks: top-right -sigma_l, bottom-left -+sigma_l
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CHECK(gw.at(a, b) == ExactComplex(0));
        CHECK(gw.at(2 + a, 2 + b) == ExactComplex(0));
        CHECK(gw.at(a, 2 + b) ==
              ExactComplex(-1) * sigma[static_cast<std::size_t>(l)].at(a, b));
        const ExactComplex lower = (l == 0) ? ExactComplex(-1) : ExactComplex(1);
        CHECK(gw.at(2 + a, b) == lower * sigma[static_cast<std::size_t>(l)].at(a, b));
      }
  }

  ExactMatrix g0d(4);
  g0d.at(0, 0) = ExactComplex(1);
  g0d.at(1, 1) = ExactComplex(1);
  g0d.at(2, 2) = ExactComplex(-1);
  g0d.at(3, 3) = ExactComplex(-1);
  CHECK(gamma_matrix(0, WBasis::dirac, frame) == g0d);
  for (int k = 1; k < 4; ++k) {
    const ExactMatrix gd = gamma_matrix(k, WBasis::dirac, frame);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CHECK(gd.at(a, b) == ExactComplex(0));
        CHECK(gd.at(2 + a, 2 + b) == ExactComplex(0));
        CHECK(gd.at(a, 2 + b) ==
              ExactComplex(-1) * sigma[static_cast<std::size_t>(k)].at(a, b));
        CHECK(gd.at(2 + a, b) == sigma[static_cast<std::size_t>(k)].at(a, b));
      }
  }
}

TEST_CASE("the Clifford map does not see the epsilon phase") {
  std::mt19937_64 rng(25);
  const ExactMatrix y = random_2x2(rng);
  TwoSpinorFrame base;
  const ExactMatrix ref = dirac_map(y, base);
  for (const ExactComplex& phase : kPhases) {
    TwoSpinorFrame f{phase, "p"};
    CHECK(dirac_map(y, f) == ref);
  }

  // float backend over a fan of phases
  CxMatrix yc(2);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) yc.at(i, j) = Cx(real(rng), real(rng));
  const CxMatrix refc = dirac_map(yc, Cx(1.0, 0.0));
  for (int k = 0; k < 16; ++k) {
    const double theta = 2.0 * M_PI * k / 16.0;
    const CxMatrix gc = dirac_map(yc, std::polar(1.0, theta));
    CHECK((gc - refc).max_abs() <= 1e-12);
  }
  CHECK_THROWS_AS(dirac_map(yc, Cx(2.0, 0.0)), NonOrthonormalFrame);
}

TEST_CASE("Weyl/Dirac basis change round-trips and maps the gamma tables") {
  // the first Weyl basis vector has Dirac components (1/sqrt2, 0, 1/sqrt2, 0)
  const Wvec e1{ExactComplex(1), ExactComplex(0), ExactComplex(0), ExactComplex(0)};
  const Wvec d = change_basis(e1, WBasis::weyl, WBasis::dirac);
  CHECK(d[0] == ExactComplex::inv_sqrt2());
  CHECK(d[1] == ExactComplex(0));
  CHECK(d[2] == ExactComplex::inv_sqrt2());
  CHECK(d[3] == ExactComplex(0));

  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    Wvec c{random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
    const Wvec round =
        change_basis(change_basis(c, WBasis::weyl, WBasis::dirac), WBasis::dirac, WBasis::weyl);
    CHECK(round == c);
    CHECK(change_basis(c, WBasis::weyl, WBasis::weyl) == c);
  }
}

TEST_CASE("Dirac adjunction and the k form") {
  DiracSpinor psi;
  psi.u = {ExactComplex(1), ExactComplex(0)};
  const CoDiracSpinor adj = dirac_adjoint(psi);
  CHECK(adj.lambda == CoSpinor{ExactComplex(0), ExactComplex(0)});
  CHECK(adj.vbar == Spinor{ExactComplex(1), ExactComplex(0)});

  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const DiracSpinor a = random_dirac(rng);
    const DiracSpinor b = random_dirac(rng);
    // k(psi, psi) is real
    const ExactComplex kaa = k_form(a, a);
    CHECK(kaa.a.im == 0);
    CHECK(kaa.b.im == 0);
    // conjugate symmetry and sesquilinearity
    CHECK(k_form(a, b) == k_form(b, a).conj());
    const ExactComplex z = random_scalar(rng);
    DiracSpinor za;
    for (int i = 0; i < 2; ++i) {
      const auto k = static_cast<std::size_t>(i);
      za.u[k] = z * a.u[k];
      za.chi[k] = z * a.chi[k];
    }
    CHECK(k_form(za, b) == z.conj() * k_form(a, b));
    CHECK(k_form(b, za) == z * k_form(b, a));
  }

  // equal U and Ubar* parts give a positive k
  DiracSpinor eq;
  eq.u = {ExactComplex(Rational(2, 3)), ExactComplex::i()};
  eq.chi = {eq.u[0], eq.u[1]};
  CHECK(sign_real(k_form(eq, eq)) == 1);

  // Gram matrices: (+,+,-,-) exactly in the Dirac basis, signature (2,2,0)
  ExactMatrix expect(4);
  expect.at(0, 0) = ExactComplex(1);
  expect.at(1, 1) = ExactComplex(1);
  expect.at(2, 2) = ExactComplex(-1);
  expect.at(3, 3) = ExactComplex(-1);
  CHECK(k_matrix(WBasis::dirac) == expect);
  CHECK(signature(k_matrix(WBasis::weyl)) == Signature{2, 2, 0});
  CHECK(signature(k_matrix(WBasis::dirac)) == Signature{2, 2, 0});

  // the basis change is an isometry of k
  const ExactMatrix kw = k_matrix(WBasis::weyl);
  const ExactMatrix kd = k_matrix(WBasis::dirac);
  for (int trial = 0; trial < 25; ++trial) {
    Wvec a{random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
    Wvec b{random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
    const Wvec ad = change_basis(a, WBasis::weyl, WBasis::dirac);
    const Wvec bd = change_basis(b, WBasis::weyl, WBasis::dirac);
    ExactComplex sw(0), sd(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto ii = static_cast<std::size_t>(i);
        const auto jj = static_cast<std::size_t>(j);
        sw = sw + a[ii].conj() * kw.at(i, j) * b[jj];
        sd = sd + ad[ii].conj() * kd.at(i, j) * bd[jj];
      }
    CHECK(sw == sd);
  }
}

TEST_CASE("charge conjugation is antilinear and squares to minus the identity") {
  std::mt19937_64 rng(28);
  for (const ExactComplex& phase : kPhases) {
    TwoSpinorFrame f{phase, "c"};
    for (int trial = 0; trial < 25; ++trial) {
      const DiracSpinor psi = random_dirac(rng);
      const DiracSpinor twice = charge_conjugation(charge_conjugation(psi, f), f);
      for (int i = 0; i < 2; ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(twice.u[k] == ExactComplex(-1) * psi.u[k]);
        CHECK(twice.chi[k] == ExactComplex(-1) * psi.chi[k]);
      }
      // antilinearity
      const ExactComplex z = random_scalar(rng);
      DiracSpinor zpsi;
      for (int i = 0; i < 2; ++i) {
        const auto k = static_cast<std::size_t>(i);
        zpsi.u[k] = z * psi.u[k];
        zpsi.chi[k] = z * psi.chi[k];
      }
      const DiracSpinor czpsi = charge_conjugation(zpsi, f);
      const DiracSpinor cpsi = charge_conjugation(psi, f);
      for (int i = 0; i < 2; ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(czpsi.u[k] == z.conj() * cpsi.u[k]);
        CHECK(czpsi.chi[k] == z.conj() * cpsi.chi[k]);
      }
    }
  }
}

TEST_CASE("observer metric, parity, and time reversal") {
  TwoSpinorFrame frame;
  const auto tau = pauli_basis(frame);

  const ExactMatrix h = observer_metric(tau[0]);
  CHECK(h.is_hermitian());
  CHECK(signature(h) == Signature{2, 0, 0});
  CHECK(h == ExactComplex::inv_sqrt2() * ExactMatrix::identity(2));

  CHECK_THROWS_AS(observer_metric(tau[1]), NotTimelike);                       // spacelike
  CHECK_THROWS_AS(observer_metric(ExactComplex(-1) * tau[0]), NotTimelike);   // past-pointing
  ExactMatrix null(2);
  null.at(0, 0) = ExactComplex(1);
  CHECK_THROWS_AS(observer_metric(null), NotTimelike);

  // a boosted observer: o = cosh-like combination with rational entries
  ExactMatrix o = ExactComplex(Rational(5, 4)) * (ExactComplex::sqrt2() * tau[0]) +
                  ExactComplex(Rational(3, 4)) * (ExactComplex::sqrt2() * tau[3]);
  // g(o,o) = 2 det(diag(2, 1/2)) = 2 -> timelike
  CHECK(signature(observer_metric(o)) == Signature{2, 0, 0});

  const ExactMatrix p = parity_operator(tau[0], frame);
  CHECK(p * p == ExactMatrix::identity(4));
  // in the Dirac basis the tau_0 parity is the diagonal (+,+,-,-) gamma
  const ExactMatrix a = weyl_dirac_change();
  CHECK(a.inverse() * p * a == gamma_matrix(0, WBasis::dirac, frame));

  // parity of the boosted observer still squares to the identity
  const ExactMatrix pb = parity_operator(o, frame);
  CHECK(pb * pb == ExactMatrix::identity(4));

  // time reversal is antilinear with square -id: M conj(M) = -Id
  for (const ExactComplex& phase : kPhases) {
    TwoSpinorFrame f{phase, "t"};
    const ExactMatrix t = time_reversal_matrix(tau[0], f);
    CHECK(t * t.conjugate() == ExactComplex(-1) * ExactMatrix::identity(4));
  }
}

#include "ewgeom/twospinor.hpp"

namespace ewgeom {

namespace {

// generic Clifford map so the float phase-invariance property can drive the
// same code path as the exact backend
template <typename T>
SquareMatrix<T> dirac_map_impl(const SquareMatrix<T>& y, const T& phase) {
  if (y.extent() != 2) throw ShapeMismatch("dirac_map needs a 2x2 argument");
  // eps_{AB} = phase * E_{AB}, epsbar = conj(phase) * E, with E the
  // antisymmetric matrix E_{12} = +1
  const T e12 = phase;
  const T e21 = T(-1) * phase;
  const T eb12 = field_conj(phase);
  const T eb21 = T(-1) * field_conj(phase);
  const auto eps = [&](int a, int b) -> T {
    if (a == b) return T(0);
    return (a == 0 && b == 1) ? e12 : e21;
  };
  const auto epsbar = [&](int a, int b) -> T {
    if (a == b) return T(0);
    return (a == 0 && b == 1) ? eb12 : eb21;
  };

  SquareMatrix<T> g(4);
  // top-right block: u'^A = sqrt2 y^{A Bdot} chi_Bdot; with the component
  // convention psi^{2+B} = -chi_B both the input and output pick up a sign,
  // leaving an overall -sqrt2 y on top and -sqrt2 (eps^T y epsbar)^T below.
  T sqrt2 = T(2);  // placeholder, replaced per backend below
  if constexpr (std::is_same_v<T, ExactComplex>) {
    sqrt2 = ExactComplex::sqrt2();
  } else {
    sqrt2 = T(std::sqrt(2.0));
  }
  for (int a = 0; a < 2; ++a)
    for (int bd = 0; bd < 2; ++bd) g.at(a, 2 + bd) = T(-1) * sqrt2 * y.at(a, bd);
  // bottom-left block: chi'_Adot = sqrt2 eps_{BC} epsbar_{Bdot Adot} y^{B Bdot} u^C
  for (int ad = 0; ad < 2; ++ad)
    for (int c = 0; c < 2; ++c) {
      T s(0);
      for (int b = 0; b < 2; ++b)
        for (int bd = 0; bd < 2; ++bd) s = s + eps(b, c) * epsbar(bd, ad) * y.at(b, bd);
      g.at(2 + ad, c) = T(-1) * sqrt2 * s;
    }
  return g;
}

const ExactComplex kZero(0);
const ExactComplex kOne(1);

}  // namespace

// ------------------------------ epsilon structure -----------------------------

CoSpinor eps_flat(const Spinor& u, const TwoSpinorFrame& frame) {
  frame.validate();
  const ExactComplex& p = frame.epsilon_phase;
  // (u flat)_1 = eps_{21} u^2, (u flat)_2 = eps_{12} u^1
  return {ExactComplex(-1) * p * u[1], p * u[0]};
}

Spinor eps_sharp(const CoSpinor& lambda, const TwoSpinorFrame& frame) {
  frame.validate();
  const ExactComplex pc = frame.epsilon_phase.conj();
  // (lambda sharp)^1 = eps^{21} lambda_2, (lambda sharp)^2 = eps^{12} lambda_1
  return {ExactComplex(-1) * pc * lambda[1], pc * lambda[0]};
}

CoSpinor eps_bar_flat(const Spinor& ubar, const TwoSpinorFrame& frame) {
  frame.validate();
  const ExactComplex pc = frame.epsilon_phase.conj();
  return {ExactComplex(-1) * pc * ubar[1], pc * ubar[0]};
}

Spinor eps_bar_sharp(const CoSpinor& mubar, const TwoSpinorFrame& frame) {
  frame.validate();
  const ExactComplex& p = frame.epsilon_phase;
  return {ExactComplex(-1) * p * mubar[1], p * mubar[0]};
}

// ------------------------------- Lorentz metric -------------------------------

ExactComplex spinor_metric(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.extent() != 2 || y.extent() != 2)
    throw ShapeMismatch("spinor_metric needs 2x2 arguments");
  return (x + y).det() - x.det() - y.det();
}

Cx spinor_metric(const CxMatrix& x, const CxMatrix& y) {
  if (x.extent() != 2 || y.extent() != 2)
    throw ShapeMismatch("spinor_metric needs 2x2 arguments");
  return (x + y).det() - x.det() - y.det();
}

std::array<ExactMatrix, 4> sigma_matrices() {
  const ExactComplex i = ExactComplex::i();
  std::array<ExactMatrix, 4> s{ExactMatrix(2), ExactMatrix(2), ExactMatrix(2), ExactMatrix(2)};
  s[0] = ExactMatrix::identity(2);
  s[1] = ExactMatrix(2, {kZero, kOne, kOne, kZero});
  s[2] = ExactMatrix(2, {kZero, ExactComplex(-1) * i, i, kZero});
  s[3] = ExactMatrix(2, {kOne, kZero, kZero, ExactComplex(-1)});
  return s;
}

std::array<ExactMatrix, 4> pauli_basis(const TwoSpinorFrame& frame) {
  frame.validate();
  std::array<ExactMatrix, 4> tau = sigma_matrices();
  for (ExactMatrix& m : tau) m = ExactComplex::inv_sqrt2() * m;
  return tau;
}

ExactComplex eta_coeff(int lambda, int mu) {
  if (lambda < 0 || lambda > 3 || mu < 0 || mu > 3)
    throw ShapeMismatch("metric coefficient index out of range");
  if (lambda != mu) return kZero;
  return lambda == 0 ? kOne : ExactComplex(-1);
}

// --------------------------------- Clifford map -------------------------------

ExactMatrix dirac_map(const ExactMatrix& y, const TwoSpinorFrame& frame) {
  frame.validate();
  return dirac_map_impl<ExactComplex>(y, frame.epsilon_phase);
}

CxMatrix dirac_map(const CxMatrix& y, const Cx& epsilon_phase) {
  if (std::abs(std::abs(epsilon_phase) - 1.0) > 1e-12)
    throw NonOrthonormalFrame("epsilon phase must have unit modulus");
  return dirac_map_impl<Cx>(y, epsilon_phase);
}

ExactMatrix gamma_matrix(int lambda, WBasis basis, const TwoSpinorFrame& frame) {
  if (lambda < 0 || lambda > 3) throw ShapeMismatch("gamma index out of range");
  const ExactMatrix g = dirac_map(pauli_basis(frame)[static_cast<std::size_t>(lambda)], frame);
  if (basis == WBasis::weyl) return g;
  const ExactMatrix a = weyl_dirac_change();
  return a.inverse() * g * a;
}

// ------------------------------ component bases -------------------------------

Wvec weyl_components(const DiracSpinor& psi) {
  return {psi.u[0], psi.u[1], ExactComplex(-1) * psi.chi[0], ExactComplex(-1) * psi.chi[1]};
}

DiracSpinor from_weyl_components(const Wvec& c) {
  DiracSpinor psi;
  psi.u = {c[0], c[1]};
  psi.chi = {ExactComplex(-1) * c[2], ExactComplex(-1) * c[3]};
  return psi;
}

ExactMatrix weyl_dirac_change() {
  // columns: Dirac basis vectors (z1 -+ z3)/sqrt2, (z2 -+ z4)/sqrt2 in Weyl
  // components
  const ExactComplex r = ExactComplex::inv_sqrt2();
  const ExactComplex nr = ExactComplex(-1) * r;
  return ExactMatrix(4, {r,     kZero, r,     kZero,   //
                         kZero, r,     kZero, r,       //
                         nr,    kZero, r,     kZero,   //
                         kZero, nr,    kZero, r});
}

Wvec change_basis(const Wvec& c, WBasis from, WBasis to) {
  if (from == to) return c;
  const ExactMatrix a = weyl_dirac_change();
  const ExactMatrix m = (from == WBasis::weyl) ? a.inverse() : a;
  Wvec out{kZero, kZero, kZero, kZero};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[static_cast<std::size_t>(i)] =
          out[static_cast<std::size_t>(i)] + m.at(i, j) * c[static_cast<std::size_t>(j)];
  return out;
}

// ------------------------------ Dirac adjunction ------------------------------

CoDiracSpinor dirac_adjoint(const DiracSpinor& psi) {
  CoDiracSpinor out;
  out.lambda = {psi.chi[0].conj(), psi.chi[1].conj()};
  out.vbar = {psi.u[0].conj(), psi.u[1].conj()};
  return out;
}

ExactComplex k_form(const DiracSpinor& phi, const DiracSpinor& psi) {
  const CoDiracSpinor adj = dirac_adjoint(phi);
  ExactComplex s(0);
  for (int a = 0; a < 2; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    s = s + adj.lambda[ia] * psi.u[ia] + adj.vbar[ia] * psi.chi[ia];
  }
  return s;
}

ExactMatrix k_matrix(WBasis basis) {
  ExactMatrix k(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Wvec ea{kZero, kZero, kZero, kZero};
      Wvec eb{kZero, kZero, kZero, kZero};
      ea[static_cast<std::size_t>(a)] = kOne;
      eb[static_cast<std::size_t>(b)] = kOne;
      const Wvec wa = (basis == WBasis::weyl) ? ea : change_basis(ea, WBasis::dirac, WBasis::weyl);
      const Wvec wb = (basis == WBasis::weyl) ? eb : change_basis(eb, WBasis::dirac, WBasis::weyl);
      k.at(a, b) = k_form(from_weyl_components(wa), from_weyl_components(wb));
    }
  return k;
}

// ----------------------------- observer structures ----------------------------

DiracSpinor charge_conjugation(const DiracSpinor& psi, const TwoSpinorFrame& frame) {
  DiracSpinor out;
  const CoSpinor chibar{psi.chi[0].conj(), psi.chi[1].conj()};  // in U*
  const Spinor ubar{psi.u[0].conj(), psi.u[1].conj()};          // in Ubar
  out.u = eps_sharp(chibar, frame);
  out.chi = eps_bar_flat(ubar, frame);
  return out;
}

ExactMatrix observer_metric(const ExactMatrix& o) {
  if (o.extent() != 2) throw ShapeMismatch("observer must be a 2x2 Hermitian vector");
  if (!o.is_hermitian()) throw NotHermitian("observer must be Hermitian");
  const ExactComplex g = spinor_metric(o, o);
  if (sign_real(g) <= 0 || sign_real(o.trace()) <= 0)
    throw NotTimelike("observer must be timelike and future-pointing");
  // adjugate: positive multiple of the inverse, with polynomial entries
  return ExactMatrix(2, {o.at(1, 1), ExactComplex(-1) * o.at(0, 1),
                         ExactComplex(-1) * o.at(1, 0), o.at(0, 0)});
}

ExactMatrix parity_operator(const ExactMatrix& o, const TwoSpinorFrame& frame) {
  observer_metric(o);  // reuse the timelike/future gate
  const ExactComplex g = spinor_metric(o, o);
  if (!g.is_rational())
    throw NotRepresentable("observer norm must be rational for the exact parity");
  const ExactComplex norm = sqrt_rational_q2(g.a.re);
  return norm.inverse() * dirac_map(o, frame);
}

ExactMatrix time_reversal_matrix(const ExactMatrix& o, const TwoSpinorFrame& frame) {
  // C is antilinear: C(psi) = C_mat conj(psi) on Weyl components, so the
  // composite T = C o P acts as T(psi) = C_mat conj(P_mat) conj(psi)
  ExactMatrix cmat(4);
  for (int b = 0; b < 4; ++b) {
    Wvec e{kZero, kZero, kZero, kZero};
    e[static_cast<std::size_t>(b)] = kOne;
    const Wvec col = weyl_components(charge_conjugation(from_weyl_components(e), frame));
    for (int a = 0; a < 4; ++a) cmat.at(a, b) = col[static_cast<std::size_t>(a)];
  }
  return cmat * parity_operator(o, frame).conjugate();
}

}  // namespace ewgeom

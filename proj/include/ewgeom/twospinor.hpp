#pragma once
// Two-spinor tower: epsilon structure on the spin space U, the Hermitian part
// of U (x) Ubar as a Lorentz vector space, the Pauli basis, the Clifford map on
// W = U (+) Ubar*, Weyl/Dirac component bases, the Dirac adjunction k, charge
// conjugation, and observer-dependent operators.
//
// Conventions fixed here (asserted by tests, not re-derivable from the API):
//  - epsilon_{12} = +phase, epsilon^{12} = +conj(phase); then sharp after flat
//    is -id, and charge conjugation squares to -id, independent of the phase.
//  - W components: psi = (u^1, u^2, psi^3, psi^4) with psi^{2+A} = -chi_A, the
//    sign chosen so the Dirac-basis gamma of the timelike Pauli vector is
//    diag(1,1,-1,-1) and k diagonalizes to (+,+,-,-).

#include <array>
#include <string>
#include <utility>

#include "cxmulti.hpp"
#include "errors.hpp"
#include "exact.hpp"

namespace ewgeom {

// ------------------------------- frame & types -------------------------------

struct TwoSpinorFrame {
  ExactComplex epsilon_phase = ExactComplex(1);
  std::string label = "default";

  // |phase| = 1, decidable exactly inside Q(i, sqrt2)
  void validate() const {
    if (!(epsilon_phase * epsilon_phase.conj() == ExactComplex(1)))
      throw NonOrthonormalFrame("epsilon phase must have unit modulus");
  }
};

using Spinor = std::array<ExactComplex, 2>;   // element of U (upper index)
using CoSpinor = std::array<ExactComplex, 2>; // element of U* or Ubar* (lower index)
using Wvec = std::array<ExactComplex, 4>;     // component vector of W in a named basis

// element of W = U (+) Ubar*: u^A together with chi_Adot
struct DiracSpinor {
  Spinor u{ExactComplex(0), ExactComplex(0)};
  CoSpinor chi{ExactComplex(0), ExactComplex(0)};
  friend bool operator==(const DiracSpinor& a, const DiracSpinor& b) {
    return a.u == b.u && a.chi == b.chi;
  }
};

// element of W* = U* (+) Ubar (image of the Dirac adjunction)
struct CoDiracSpinor {
  CoSpinor lambda{ExactComplex(0), ExactComplex(0)};  // U* part
  Spinor vbar{ExactComplex(0), ExactComplex(0)};      // Ubar part
};

enum class WBasis { weyl, dirac };

// ------------------------------ epsilon structure -----------------------------

// (u flat)_B = eps_{AB} u^A
CoSpinor eps_flat(const Spinor& u, const TwoSpinorFrame& frame);
// (lambda sharp)^B = eps^{AB} lambda_A
Spinor eps_sharp(const CoSpinor& lambda, const TwoSpinorFrame& frame);
// conjugate copies acting on Ubar / Ubar*
CoSpinor eps_bar_flat(const Spinor& ubar, const TwoSpinorFrame& frame);
Spinor eps_bar_sharp(const CoSpinor& mubar, const TwoSpinorFrame& frame);

// ------------------------------- Lorentz metric -------------------------------

// g(x, y) on U (x) Ubar via the polarized determinant; g(w,w) = 2 det w
ExactComplex spinor_metric(const ExactMatrix& x, const ExactMatrix& y);
Cx spinor_metric(const CxMatrix& x, const CxMatrix& y);

// tau_0..tau_3 = sigma_lambda / sqrt2 (Hermitian, g-orthonormal)
std::array<ExactMatrix, 4> pauli_basis(const TwoSpinorFrame& frame);
// plain sigma matrices (identity + the three Pauli matrices)
std::array<ExactMatrix, 4> sigma_matrices();

// --------------------------------- Clifford map -------------------------------

// gamma(y) on W in the Weyl component basis, from the decomposable rule
//   gamma(p (x) qbar)(u, chi) = sqrt2 (<chi, qbar> p, <p flat, u> qbar flat)
ExactMatrix dirac_map(const ExactMatrix& y, const TwoSpinorFrame& frame);
CxMatrix dirac_map(const CxMatrix& y, const Cx& epsilon_phase);

// gamma(tau_lambda) in the requested component basis
ExactMatrix gamma_matrix(int lambda, WBasis basis, const TwoSpinorFrame& frame);

// metric coefficients g(tau_lambda, tau_mu) = diag(1,-1,-1,-1)
ExactComplex eta_coeff(int lambda, int mu);

// ------------------------------ component bases -------------------------------

Wvec weyl_components(const DiracSpinor& psi);
DiracSpinor from_weyl_components(const Wvec& c);
// basis-change matrix: column beta holds the Weyl components of the beta-th
// Dirac basis vector
ExactMatrix weyl_dirac_change();
Wvec change_basis(const Wvec& c, WBasis from, WBasis to);

// ------------------------------ Dirac adjunction ------------------------------

// (u, chi) -> (conj chi, conj u) in W* (antilinear)
CoDiracSpinor dirac_adjoint(const DiracSpinor& psi);
// k(phi, psi) = <adjoint(phi), psi>; antilinear in phi, linear in psi
ExactComplex k_form(const DiracSpinor& phi, const DiracSpinor& psi);
// Gram matrix of k in the requested component basis (for signature checks)
ExactMatrix k_matrix(WBasis basis);

// ----------------------------- observer structures ----------------------------

// charge conjugation C(u, chi) = (sharp of conj chi, bar-flat of conj u);
// antilinear, C^2 = -id for every admissible phase
DiracSpinor charge_conjugation(const DiracSpinor& psi, const TwoSpinorFrame& frame);

// positive Hermitian metric on U induced by a timelike future-pointing o
// (components h_{Adot B} = adjugate(o)); NotTimelike otherwise
ExactMatrix observer_metric(const ExactMatrix& o);

// parity operator gamma(o)/sqrt(g(o,o)) in the Weyl component basis; squares
// to the identity.  NotRepresentable if the normalization leaves Q(i,sqrt2).
ExactMatrix parity_operator(const ExactMatrix& o, const TwoSpinorFrame& frame);

// time reversal = charge conjugation composed with parity; antilinear, so the
// returned matrix M acts as psi -> M conj(psi) on Weyl components
ExactMatrix time_reversal_matrix(const ExactMatrix& o, const TwoSpinorFrame& frame);

}  // namespace ewgeom

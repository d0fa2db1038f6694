#pragma once
// Electroweak layer: isospin frames with their Pauli-style iota frame, the
// Higgs field with potential and polar split, mixing-angle subbundle
// decomposition, assembly and extraction of the physical gauge components,
// induced isospin connections, frame rotation of connection coefficients,
// and the four-term pointwise Lagrangian.
//
// Conventions fixed here (asserted by tests):
//  - iota matrices are stored with the conjugate (bar) index as the row, so
//    in the standard frame iota_lambda is numerically the lambda-th Pauli
//    matrix and xibar_1 (x) xi_1 = (iota_0 + iota_3)/2;
//  - the bilinear pairing on such matrices is the polarized double-determinant
//    form tr(m)tr(n) - tr(mn), under which the iota frame has Gram matrix
//    2 diag(1,-1,-1,-1);
//  - fermion jets carry covariant derivatives in their "d" slots, and the
//    gauge curvature table is supplied as input, as in the spacetime layer.

#include <array>
#include <vector>

#include "cxmulti.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "scales.hpp"
#include "tetrad.hpp"

namespace ewgeom {

using CxVec2 = std::array<Cx, 2>;
using CxMat2 = std::array<CxVec2, 2>;

// ============================== isospin frame ================================

// two h-orthonormal fiber vectors spanning the isospin space
struct IsospinFrame {
  CxMatrix h = CxMatrix::identity(2);  // positive Hermitian pairing
  std::array<CxVec2, 2> xi = {CxVec2{Cx(1.0, 0.0), Cx(0.0, 0.0)},
                              CxVec2{Cx(0.0, 0.0), Cx(1.0, 0.0)}};

  // NotHermitian for a bad pairing, NonOrthonormalFrame when the Gram matrix
  // of the frame vectors is not the identity (this also pins the unit norm of
  // the induced volume form)
  void validate(double tol = 1e-12) const;
};

// the four Pauli-style directions of the conjugate-tensor space, in ambient
// components (row = conjugate index)
std::array<CxMatrix, 4> iota_frame(const IsospinFrame& frame);

// mixing-angle direction -(sin^2 iota_0 + cos^2 iota_3)/2; BadAngle outside
// the open interval (0, pi/2)
CxMatrix iota_prime(const IsospinFrame& frame, double theta_w);

// polarized double-determinant pairing evaluated on frame components
Cx epsilon_pairing(const CxMatrix& m, const CxMatrix& n, const IsospinFrame& frame);

// residuals of the first diagonal subbundle direction xibar_1 (x) xi_1 against
// (iota_0 + iota_3)/2 (the identity that holds) and against (iota_1 + iota_3)/2
// (a circulating variant that does not)
struct FrameIdentityReport {
  double identity_residual;
  double variant_residual;
};
FrameIdentityReport e1_identity_report(const IsospinFrame& frame);

// ================================== Higgs ====================================

// doublet value with its potential parameters; components refer to an
// h-orthonormal frame and the field carries an inverse length
struct HiggsValue {
  CxVec2 phi{};
  double mu = 0.0;      // potential scale, carries an inverse length
  double lambda = 1.0;  // positive quartic coupling
  int omega_power = -1; // complex-volume factor tag

  ScaledReal norm_squared() const;  // h-contraction, carries L^-2
};

// lambda (2 mu^2 s - s^2) at s = |phi|^2, carrying L^-4
ScaledReal higgs_potential(const HiggsValue& hv);
// the critical squared norm s* = mu^2 of the potential, carrying L^-2
ScaledReal potential_stationary(const HiggsValue& hv);

// polar split phi = S (0, |phi|) with S special unitary; f = |phi| - mu
struct HiggsPolar {
  ScaledReal f;
  CxMatrix s;
};
HiggsPolar higgs_polar(const HiggsValue& hv);  // ZeroHiggs at |phi| = 0

// ============================== gauge fields =================================

// the physical field components; the conjugate charged field is never stored
struct EWGaugeFields {
  std::array<double, 4> a{};
  std::array<double, 4> z{};
  std::array<Cx, 4> wp{};
  // mixing angle in (0, pi/2); the default is the symmetric midpoint, not a
  // preferred physical value
  double theta_w = 0.78539816339744831;
};

// W components W^mu_lambda on the iota frame (row mu, column lambda); the
// inverse solves the component system using the doubled Lorentz Gram matrix
CxMatrix assemble_w(const EWGaugeFields& fields, const IsospinFrame& frame);
EWGaugeFields extract_fields(const CxMatrix& w, double theta_w, const IsospinFrame& frame);

// volume-contracted field: twice the iota_0 row
std::array<Cx, 4> hat_w(const CxMatrix& w, const IsospinFrame& frame);

// isospin connection X_lambda = i q W^mu_lambda sigma_mu and the induced
// trace connection X-hat
struct InducedConnection {
  std::array<CxMatrix, 4> x;
  std::array<Cx, 4> x_hat;
};
InducedConnection induced_connection(const CxMatrix& w, double q);

// frame rotation of connection coefficient matrices: S X_a S^-1 + (dS) S^-1;
// NonConstantDeterminant unless det S is a nonzero constant
std::vector<PolyMatrix> rotate_connection(const std::vector<PolyMatrix>& x,
                                          const PolyMatrix& s);

// ================================ fermions ===================================

// right-handed doublet-singlet and left-handed doublet components; the integer
// tags count complex-volume factors and must cancel in interaction terms
struct FermionValue {
  CxVec2 psi_r{};
  CxMat2 psi_l{};  // psi_l[alpha][adot]
  int omega_power_r = 1;
  int omega_power_l = 0;
};

struct FermionJet {
  FermionValue value;
  std::array<FermionValue, 4> d;  // d[a] = covariant derivative along a
};

struct HiggsJet {
  HiggsValue value;
  std::array<CxVec2, 4> d;
};

// ============================ pointwise Lagrangian ===========================

struct EWPointData {
  Tetrad theta;
  FermionJet psi;
  HiggsJet phi;
  // gauge curvature table R[a][b], 2x2 anti-Hermitian values, antisymmetric
  // in the spacetime pair; dimensionless like the connection it comes from
  std::array<std::array<CxMatrix, 4>, 4> curvature;
  double mass = 0.0;    // carries an inverse length
  double lambda = 1.0;  // positive quartic coupling

  EWPointData();
};

struct EWTerms {
  ScaledReal psi;
  ScaledReal phi;
  ScaledReal gauge;
  ScaledReal interaction;
};

// pointwise values of the four Lagrangian contributions, each tagged with its
// composed scale; SingularTetrad when the soldering form does not invert,
// OmegaPowerMismatch when the volume tags fail to cancel in the interaction
EWTerms ew_lagrangian_point(const EWPointData& data);

}  // namespace ewgeom

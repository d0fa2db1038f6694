#pragma once
// Spacetime interface of the spinor tower: the soldering form, its pullback
// metric and determinant density, the fiber-volume contraction of
// vector-valued forms, mass-shell projectors, the pointwise Dirac operator,
// the electron-photon interaction contraction, and the pointwise Lagrangian
// terms of the Einstein-Cartan-Maxwell-Dirac system.
//
// Conventions fixed here (asserted by tests):
//  - the fiber volume form assigns 1 to the ordered Pauli frame, so the
//    contraction of an H-valued r-form carries the weight 1/(4-r)! that makes
//    the degree-1 contraction the cofactor pairing: breve(theta)(xi) =
//    sum cof(Theta)^a_lam xi^lam_a, and reinserting a full soldering column
//    gives 4 det Theta;
//  - field jets carry covariant derivatives in their "d" slots; connection
//    assembly happens upstream.

#include <array>
#include <utility>
#include <vector>

#include "cxmulti.hpp"
#include "errors.hpp"
#include "scales.hpp"
#include "twospinor.hpp"

namespace ewgeom {

using Real4 = std::array<double, 4>;
using RealMat4 = std::array<Real4, 4>;
using CxVec4 = std::array<Cx, 4>;

// =================================== Tetrad ==================================

// soldering form components Theta^lambda_a (row: Pauli direction, column:
// spacetime direction), carrying one length scale
struct Tetrad {
  RealMat4 comp{};

  static Tetrad identity();
  static Tetrad diagonal(const Real4& entries);

  double det() const;
  bool is_invertible(double tol = 1e-12) const;
  // inverse components (theta-check)^a_lambda; SingularTetrad when not invertible
  RealMat4 inverse(double tol = 1e-12) const;
};

struct ScaledMatrix {
  CxMatrix matrix;
  ScaleDim dim;
};

// (Theta*g)_{ab} = g_{lam mu} Theta^lam_a Theta^mu_b, carrying a squared length
ScaledMatrix pullback_metric(const Tetrad& theta);
// signed determinant with its fourth-power length scale
ScaledReal det_theta(const Tetrad& theta);

// ================================= FiberForm =================================

// r-form on spacetime valued in the r-th wedge power of the Pauli space,
// r in 1..3; real components stored over the full index ranges and
// antisymmetrized separately in the base and fiber groups
class FiberForm {
 public:
  explicit FiberForm(int degree);

  int degree() const { return degree_; }
  double at(const std::vector<int>& base_idx, const std::vector<int>& fiber_idx) const;
  // writes the value at the given tuple and every permuted copy with signs
  void set_antisym(const std::vector<int>& base_idx, const std::vector<int>& fiber_idx,
                   double value);

  // degree-1 form from a component table xi[lambda][a]
  static FiberForm one_form(const RealMat4& xi);
  // decomposable degree-2 form base2_{ab} * fiber2^{lam mu}
  static FiberForm product_two_form(const RealMat4& base2, const RealMat4& fiber2);

  friend FiberForm operator+(const FiberForm& a, const FiberForm& b);
  friend FiberForm operator*(double s, const FiberForm& a);

 private:
  std::size_t flat(const std::vector<int>& base_idx, const std::vector<int>& fiber_idx) const;
  int degree_;
  std::vector<double> comp_;
};

// fiber-volume contraction of theta^(4-r) ^ xi: the coefficient of the
// coordinate volume, carrying L^(4-r)
ScaledReal theta_breve(const Tetrad& theta, const FiberForm& xi);

// =============================== mass shells =================================

struct MassShellPoint {
  Real4 p{};        // covector components, timelike entry first
  double mass = 0;  // carries an inverse length

  // future-pointing and on-shell within tolerance; OffShell otherwise
  void validate(double tol = 1e-10) const;
  // contravariant momentum g#(p) = (p_0, -p_1, -p_2, -p_3)
  Real4 p_sharp() const;
};

// float copy of the Clifford map on the requested component basis
CxMatrix gamma_matrix_float(int lambda, WBasis basis);
// gamma[v] for a contravariant Pauli-space vector
CxMatrix gamma_of_vector(const Real4& v, WBasis basis);

// P+- = (Id +- gamma[p#]/m)/2; ranks 2 + 2 split the Dirac space
std::pair<CxMatrix, CxMatrix> mass_shell_projectors(const MassShellPoint& pt, WBasis basis);

// ============================ pointwise operators ============================

// Dirac operator at a point: contract the tetrad inverse with gamma acting on
// the covariant derivative table dpsi[a]; SingularTetrad when not invertible
CxVec4 dirac_operator_point(const Tetrad& theta, const std::array<CxVec4, 4>& dpsi,
                            WBasis basis);

// lambda-th slice of the interaction tensor: minus the Dirac pairing matrix
// composed with the Clifford map, so that contraction against
// conj(phi) (x) A (x) psi is -k(phi, gamma[A] psi)
CxMatrix interaction_matrix(int lambda, WBasis basis);
Cx interaction_contraction(const CxVec4& phi, const Real4& a_vec, const CxVec4& psi,
                           WBasis basis);

// k(phi, psi) on float component vectors
Cx k_pairing(const CxVec4& phi, const CxVec4& psi, WBasis basis);

// ============================ pointwise Lagrangian ===========================

struct FieldJetC {
  CxVec4 value{};
  std::array<CxVec4, 4> d{};  // d[a] = covariant derivative along direction a
};

struct ECMDData {
  Tetrad theta;
  FiberForm curvature{2};      // spacetime-2-form valued in fiber bivectors
  double grav_coupling = 1.0;  // numeric value of the squared-length constant
  Real4 y{};                   // electromagnetic potential components Y_a
  RealMat4 dy{};               // dy[a][b] = partial_a Y_b
  RealMat4 f{};                // field strength F_{lam mu}, fiber indices down
  FieldJetC psi;               // Dirac-basis spinor jet
  double mass = 0.0;           // carries an inverse length
};

struct ECMDTerms {
  ScaledReal gravity;
  ScaledReal electromagnetic;
  ScaledReal dirac;
};

// pointwise values of the three Lagrangian contributions, each tagged with
// its composed scale; SingularTetrad when the Dirac term needs the inverse
ECMDTerms ecmd_lagrangian_point(const ECMDData& data);

}  // namespace ewgeom

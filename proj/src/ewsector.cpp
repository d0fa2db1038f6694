#include "ewgeom/ewsector.hpp"

#include <cmath>

#include "ewgeom/twospinor.hpp"

namespace ewgeom {

namespace {

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

CxMatrix to_float_matrix(const ExactMatrix& m) {
  CxMatrix out(m.extent());
  for (int r = 0; r < m.extent(); ++r)
    for (int c = 0; c < m.extent(); ++c) out.at(r, c) = m.at(r, c).to_complex();
  return out;
}

const std::array<CxMatrix, 4>& sigma_float() {
  static const std::array<CxMatrix, 4> table = [] {
    const std::array<ExactMatrix, 4> exact = sigma_matrices();
    return std::array<CxMatrix, 4>{to_float_matrix(exact[0]), to_float_matrix(exact[1]),
                                   to_float_matrix(exact[2]), to_float_matrix(exact[3])};
  }();
  return table;
}

// frame vectors as matrix columns
CxMatrix frame_columns(const IsospinFrame& frame) {
  CxMatrix xi(2);
  for (int i = 0; i < 2; ++i)
    for (int alpha = 0; alpha < 2; ++alpha)
      xi.at(i, alpha) = frame.xi[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(i)];
  return xi;
}

// ambient matrix of a frame-component table (conjugate index as row)
CxMatrix ambient_from_frame(const CxMatrix& coeff, const IsospinFrame& frame) {
  CxMatrix out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Cx sum(0.0, 0.0);
      for (int ad = 0; ad < 2; ++ad)
        for (int al = 0; al < 2; ++al)
          sum += coeff.at(ad, al) *
                 std::conj(frame.xi[static_cast<std::size_t>(ad)][static_cast<std::size_t>(i)]) *
                 frame.xi[static_cast<std::size_t>(al)][static_cast<std::size_t>(j)];
      out.at(i, j) = sum;
    }
  return out;
}

void check_angle(double theta_w) {
  if (!(theta_w > 0.0 && theta_w < 1.5707963267948966))
    throw BadAngle("mixing angle must lie in the open interval (0, pi/2)");
}

void check_w_shape(const CxMatrix& w) {
  if (w.extent() != 4) throw ShapeMismatch("gauge component table must be 4x4");
}

double frame_norm(const CxVec2& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

}  // namespace

// ============================== isospin frame ================================

void IsospinFrame::validate(double tol) const {
  if (h.extent() != 2) throw ShapeMismatch("isospin pairing must be 2x2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(h.at(i, j) - std::conj(h.at(j, i))) > tol)
        throw NotHermitian("isospin pairing must be Hermitian");
  // Gram matrix of the frame vectors; the identity requirement also pins the
  // unit norm of the induced volume form
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta) {
      Cx gram(0.0, 0.0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          gram += std::conj(xi[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(i)]) *
                  h.at(i, j) * xi[static_cast<std::size_t>(beta)][static_cast<std::size_t>(j)];
      const Cx expected(alpha == beta ? 1.0 : 0.0, 0.0);
      if (std::abs(gram - expected) > tol)
        throw NonOrthonormalFrame("isospin frame is not h-orthonormal");
    }
}

std::array<CxMatrix, 4> iota_frame(const IsospinFrame& frame) {
  frame.validate();
  std::array<CxMatrix, 4> out{CxMatrix(2), CxMatrix(2), CxMatrix(2), CxMatrix(2)};
  for (int lam = 0; lam < 4; ++lam)
    out[static_cast<std::size_t>(lam)] = ambient_from_frame(sigma_float()[static_cast<std::size_t>(lam)], frame);
  return out;
}

CxMatrix iota_prime(const IsospinFrame& frame, double theta_w) {
  check_angle(theta_w);
  const std::array<CxMatrix, 4> iota = iota_frame(frame);
  const double sin_sq = std::sin(theta_w) * std::sin(theta_w);
  const double cos_sq = std::cos(theta_w) * std::cos(theta_w);
  return Cx(-0.5 * sin_sq, 0.0) * iota[0] + Cx(-0.5 * cos_sq, 0.0) * iota[3];
}

Cx epsilon_pairing(const CxMatrix& m, const CxMatrix& n, const IsospinFrame& frame) {
  frame.validate();
  if (m.extent() != 2 || n.extent() != 2)
    throw ShapeMismatch("pairing operands must be 2x2");
  const CxMatrix xi_inv = frame_columns(frame).inverse();
  // frame components: conj(Xi^-1) M (Xi^-1)^T
  auto to_frame = [&xi_inv](const CxMatrix& amb) {
    CxMatrix out(2);
    for (int ad = 0; ad < 2; ++ad)
      for (int al = 0; al < 2; ++al) {
        Cx sum(0.0, 0.0);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            sum += std::conj(xi_inv.at(ad, i)) * amb.at(i, j) * xi_inv.at(al, j);
        out.at(ad, al) = sum;
      }
    return out;
  };
  const CxMatrix mf = to_frame(m);
  const CxMatrix nf = to_frame(n);
  return mf.trace() * nf.trace() - (mf * nf).trace();
}

FrameIdentityReport e1_identity_report(const IsospinFrame& frame) {
  const std::array<CxMatrix, 4> iota = iota_frame(frame);
  CxMatrix rank_one(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rank_one.at(i, j) = std::conj(frame.xi[0][static_cast<std::size_t>(i)]) *
                          frame.xi[0][static_cast<std::size_t>(j)];
  const Cx half(0.5, 0.0);
  const double identity = (rank_one - half * (iota[0] + iota[3])).max_abs();
  const double variant = (rank_one - half * (iota[1] + iota[3])).max_abs();
  return {identity, variant};
}

// ================================== Higgs ====================================

ScaledReal HiggsValue::norm_squared() const {
  return {std::norm(phi[0]) + std::norm(phi[1]), dim_power(dim_length(), -2)};
}

ScaledReal higgs_potential(const HiggsValue& hv) {
  const ScaledReal s = hv.norm_squared();
  const ScaledReal mu_sq{hv.mu * hv.mu, dim_power(dim_length(), -2)};
  return hv.lambda * (2.0 * (mu_sq * s) - s * s);
}

ScaledReal potential_stationary(const HiggsValue& hv) {
  return {hv.mu * hv.mu, dim_power(dim_length(), -2)};
}

HiggsPolar higgs_polar(const HiggsValue& hv) {
  const double norm = frame_norm(hv.phi);
  if (norm == 0.0) throw ZeroHiggs("polar split needs a nonzero field value");
  CxMatrix s(2);
  s.at(0, 0) = std::conj(hv.phi[1]) / norm;
  s.at(0, 1) = hv.phi[0] / norm;
  s.at(1, 0) = -std::conj(hv.phi[0]) / norm;
  s.at(1, 1) = hv.phi[1] / norm;
  return {{norm - hv.mu, dim_power(dim_length(), -1)}, s};
}

// ============================== gauge fields =================================

CxMatrix assemble_w(const EWGaugeFields& fields, const IsospinFrame& frame) {
  frame.validate();
  check_angle(fields.theta_w);
  const double sin_sq = std::sin(fields.theta_w) * std::sin(fields.theta_w);
  const double cos_sq = std::cos(fields.theta_w) * std::cos(fields.theta_w);
  CxMatrix w(4);
  for (int lam = 0; lam < 4; ++lam) {
    const double a = fields.a[static_cast<std::size_t>(lam)];
    const double z = fields.z[static_cast<std::size_t>(lam)];
    const Cx wp = fields.wp[static_cast<std::size_t>(lam)];
    const Cx wm = std::conj(wp);
    w.at(0, lam) = Cx(0.5 * a - 0.5 * sin_sq * z, 0.0);
    w.at(1, lam) = Cx(0.5, 0.0) * (wp + wm);
    w.at(2, lam) = Cx(0.0, 0.5) * (wp - wm);
    w.at(3, lam) = Cx(-0.5 * a - 0.5 * cos_sq * z, 0.0);
  }
  return w;
}

EWGaugeFields extract_fields(const CxMatrix& w, double theta_w, const IsospinFrame& frame) {
  frame.validate();
  check_angle(theta_w);
  check_w_shape(w);
  const double cos_two = std::cos(2.0 * theta_w);
  EWGaugeFields out;
  out.theta_w = theta_w;
  for (int lam = 0; lam < 4; ++lam) {
    const Cx w0 = w.at(0, lam);
    const Cx w3 = w.at(3, lam);
    out.z[static_cast<std::size_t>(lam)] = (Cx(-2.0, 0.0) * (w0 + w3)).real();
    out.a[static_cast<std::size_t>(lam)] =
        (w0 - w3 + Cx(cos_two, 0.0) * (w0 + w3)).real();
    out.wp[static_cast<std::size_t>(lam)] = w.at(1, lam) - Cx(0.0, 1.0) * w.at(2, lam);
  }
  return out;
}

std::array<Cx, 4> hat_w(const CxMatrix& w, const IsospinFrame& frame) {
  frame.validate();
  check_w_shape(w);
  std::array<Cx, 4> out{};
  for (int lam = 0; lam < 4; ++lam)
    out[static_cast<std::size_t>(lam)] = Cx(2.0, 0.0) * w.at(0, lam);
  return out;
}

InducedConnection induced_connection(const CxMatrix& w, double q) {
  check_w_shape(w);
  InducedConnection out{{CxMatrix(2), CxMatrix(2), CxMatrix(2), CxMatrix(2)}, {}};
  for (int lam = 0; lam < 4; ++lam) {
    CxMatrix x(2);
    for (int mu = 0; mu < 4; ++mu)
      x = x + (Cx(0.0, q) * w.at(mu, lam)) * sigma_float()[static_cast<std::size_t>(mu)];
    out.x[static_cast<std::size_t>(lam)] = x;
    out.x_hat[static_cast<std::size_t>(lam)] = x.trace();
  }
  return out;
}

std::vector<PolyMatrix> rotate_connection(const std::vector<PolyMatrix>& x,
                                          const PolyMatrix& s) {
  if (x.size() != 4) throw ShapeMismatch("connection table needs one matrix per direction");
  if (s.extent() != 2) throw ShapeMismatch("frame-change matrix must be 2x2");
  const int nvars = s.nvars();
  if (nvars < 4) throw ChartMismatch("frame change needs at least the four base variables");
  for (const PolyMatrix& xa : x)
    if (xa.extent() != 2 || xa.nvars() != nvars)
      throw ChartMismatch("connection coefficients disagree with the frame change");
  const Poly det = s.det();
  if (!det.is_constant() || det.constant_value().is_zero())
    throw NonConstantDeterminant("frame-change determinant must be a nonzero constant");
  const Poly inv_det = Poly::constant(nvars, det.constant_value().inverse());
  const PolyMatrix s_inv = inv_det * s.adjugate();
  std::vector<PolyMatrix> out;
  out.reserve(4);
  for (int a = 0; a < 4; ++a)
    out.push_back(s * x[static_cast<std::size_t>(a)] * s_inv + s.partial(a) * s_inv);
  return out;
}

// ============================ pointwise Lagrangian ===========================

EWPointData::EWPointData() {
  for (auto& row : curvature)
    for (CxMatrix& entry : row) entry = CxMatrix(2);
}

EWTerms ew_lagrangian_point(const EWPointData& data) {
  if (!data.theta.is_invertible())
    throw SingularTetrad("Lagrangian terms need an invertible soldering form");
  if (data.phi.value.omega_power + data.psi.value.omega_power_r -
          data.psi.value.omega_power_l !=
      0)
    throw OmegaPowerMismatch("volume-factor tags do not cancel in the interaction");

  const ScaledReal det = det_theta(data.theta);
  const ScaleDim dim_psi = dim_power(dim_length(), Rational(-3, 2));
  const ScaleDim dim_phi = dim_power(dim_length(), -1);

  // inverse spacetime metric from the soldering form, carrying L^-2
  const CxMatrix g_inv = pullback_metric(data.theta).matrix.inverse();
  const ScaleDim dim_g_inv = dim_power(dim_length(), -2);

  // fermion kinetic term: the chiral halves ride through the Clifford pairing
  // with the same normalization as the spacetime Dirac term
  auto chiral_xi = [&data](int lam, int a) {
    const CxMatrix gamma_up =
        Cx(kEta[lam], 0.0) * gamma_matrix_float(lam, WBasis::weyl);
    auto paired = [&gamma_up](const CxVec4& value, const CxVec4& deriv) {
      CxVec4 gd{};
      for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
          gd[static_cast<std::size_t>(row)] +=
              gamma_up.at(row, col) * deriv[static_cast<std::size_t>(col)];
      return k_pairing(value, gd, WBasis::weyl);
    };
    const FermionValue& v = data.psi.value;
    const FermionValue& dv = data.psi.d[static_cast<std::size_t>(a)];
    Cx sum = paired({v.psi_r[0], v.psi_r[1], Cx(), Cx()},
                    {dv.psi_r[0], dv.psi_r[1], Cx(), Cx()});
    for (int alpha = 0; alpha < 2; ++alpha)
      sum += paired({Cx(), Cx(), v.psi_l[static_cast<std::size_t>(alpha)][0],
                     v.psi_l[static_cast<std::size_t>(alpha)][1]},
                    {Cx(), Cx(), dv.psi_l[static_cast<std::size_t>(alpha)][0],
                     dv.psi_l[static_cast<std::size_t>(alpha)][1]});
    return -sum.imag();
  };
  RealMat4 xi{};
  for (int lam = 0; lam < 4; ++lam)
    for (int a = 0; a < 4; ++a)
      xi[static_cast<std::size_t>(lam)][static_cast<std::size_t>(a)] = chiral_xi(lam, a);
  const ScaledReal breve_psi = theta_breve(data.theta, FiberForm::one_form(xi));
  const ScaledReal l_psi{breve_psi.value,
                         dim_combine(breve_psi.dim, dim_power(dim_psi, 2))};

  // scalar term: metric-contracted gradient plus the potential, times the
  // volume density
  Cx grad(0.0, 0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Cx pair(0.0, 0.0);
      for (int alpha = 0; alpha < 2; ++alpha)
        pair += std::conj(data.phi.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(alpha)]) *
                data.phi.d[static_cast<std::size_t>(b)][static_cast<std::size_t>(alpha)];
      grad += g_inv.at(a, b) * pair;
    }
  const ScaledReal kinetic_phi{grad.real(),
                               dim_combine(dim_g_inv, dim_power(dim_phi, 2))};
  const ScaledReal s{std::norm(data.phi.value.phi[0]) + std::norm(data.phi.value.phi[1]),
                     dim_power(dim_phi, 2)};
  const ScaledReal mass_sq{data.mass * data.mass, dim_power(dim_length(), -2)};
  const ScaledReal potential = data.lambda * (2.0 * (mass_sq * s) - s * s);
  const ScaledReal l_phi = (kinetic_phi + potential) * det;

  // gauge term: double metric contraction of the conjugate curvature pair
  Cx gauge_sum(0.0, 0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const Cx weight = g_inv.at(a, c) * g_inv.at(b, d);
          if (weight == Cx(0.0, 0.0)) continue;
          Cx pair(0.0, 0.0);
          for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col)
              pair += std::conj(
                          data.curvature[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                              .at(r, col)) *
                      data.curvature[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]
                          .at(r, col);
          gauge_sum += weight * pair;
        }
  const ScaledReal l_x =
      ScaledReal{-gauge_sum.real(), dim_power(dim_g_inv, 2)} * det;

  // interaction: the two conjugate cross pairings sum to a real value
  Cx cross(0.0, 0.0);
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int aa = 0; aa < 2; ++aa)
      cross += std::conj(
                   data.psi.value.psi_l[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(aa)]) *
               data.phi.value.phi[static_cast<std::size_t>(alpha)] *
               data.psi.value.psi_r[static_cast<std::size_t>(aa)];
  const double interaction_value = -(cross + std::conj(cross)).real();
  const ScaledReal l_int =
      ScaledReal{interaction_value,
                 dim_combine(dim_power(dim_psi, 2), dim_phi)} *
      det;

  return {l_psi, l_phi, l_x, l_int};
}

}  // namespace ewgeom

#include "ewgeom/tetrad.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace ewgeom {

namespace {

// metric signs of the Pauli frame: g = diag(1,-1,-1,-1)
constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

Eigen::Matrix4d to_eigen(const RealMat4& m) {
  Eigen::Matrix4d e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return e;
}

struct Perm4 {
  std::array<int, 4> idx;
  int sign;
};

const std::vector<Perm4>& perms4() {
  static const std::vector<Perm4> table = [] {
    std::vector<Perm4> out;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
      out.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return table;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const TwoSpinorFrame& default_frame() {
  static const TwoSpinorFrame frame{};
  return frame;
}

CxMatrix to_float_matrix(const ExactMatrix& m) {
  CxMatrix out(m.extent());
  for (int r = 0; r < m.extent(); ++r)
    for (int c = 0; c < m.extent(); ++c) out.at(r, c) = m.at(r, c).to_complex();
  return out;
}

}  // namespace

// =================================== Tetrad ==================================

Tetrad Tetrad::identity() {
  Tetrad t;
  for (std::size_t i = 0; i < 4; ++i) t.comp[i][i] = 1.0;
  return t;
}

Tetrad Tetrad::diagonal(const Real4& entries) {
  Tetrad t;
  for (std::size_t i = 0; i < 4; ++i) t.comp[i][i] = entries[i];
  return t;
}

double Tetrad::det() const { return to_eigen(comp).determinant(); }

bool Tetrad::is_invertible(double tol) const {
  double scale = 0.0;
  for (const auto& row : comp)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return false;
  return std::abs(det()) > tol * scale * scale * scale * scale;
}

RealMat4 Tetrad::inverse(double tol) const {
  if (!is_invertible(tol)) throw SingularTetrad("soldering form is not invertible here");
  const Eigen::Matrix4d inv = to_eigen(comp).inverse();
  RealMat4 out{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t lam = 0; lam < 4; ++lam) out[a][lam] = inv(static_cast<int>(a), static_cast<int>(lam));
  return out;
}

ScaledMatrix pullback_metric(const Tetrad& theta) {
  CxMatrix m(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double sum = 0.0;
      for (int lam = 0; lam < 4; ++lam)
        sum += kEta[lam] * theta.comp[static_cast<std::size_t>(lam)][static_cast<std::size_t>(a)] *
               theta.comp[static_cast<std::size_t>(lam)][static_cast<std::size_t>(b)];
      m.at(a, b) = Cx(sum, 0.0);
    }
  return {m, dim_power(dim_length(), 2)};
}

ScaledReal det_theta(const Tetrad& theta) {
  return {theta.det(), dim_power(dim_length(), 4)};
}

// ================================= FiberForm =================================

FiberForm::FiberForm(int degree) : degree_(degree) {
  if (degree < 1 || degree > 3) throw ShapeMismatch("fiber-form degree must be in 1..3");
  std::size_t size = 1;
  for (int i = 0; i < 2 * degree; ++i) size *= 4;
  comp_.assign(size, 0.0);
}

std::size_t FiberForm::flat(const std::vector<int>& base_idx,
                            const std::vector<int>& fiber_idx) const {
  if (static_cast<int>(base_idx.size()) != degree_ ||
      static_cast<int>(fiber_idx.size()) != degree_)
    throw ShapeMismatch("index tuple sizes must equal the form degree");
  std::size_t pos = 0;
  std::size_t stride = 1;
  for (int v : base_idx) {
    if (v < 0 || v > 3) throw ShapeMismatch("index out of range");
    pos += static_cast<std::size_t>(v) * stride;
    stride *= 4;
  }
  for (int v : fiber_idx) {
    if (v < 0 || v > 3) throw ShapeMismatch("index out of range");
    pos += static_cast<std::size_t>(v) * stride;
    stride *= 4;
  }
  return pos;
}

double FiberForm::at(const std::vector<int>& base_idx, const std::vector<int>& fiber_idx) const {
  return comp_[flat(base_idx, fiber_idx)];
}

void FiberForm::set_antisym(const std::vector<int>& base_idx, const std::vector<int>& fiber_idx,
                            double value) {
  auto distinct = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j]) return false;
    return true;
  };
  if (!distinct(base_idx) || !distinct(fiber_idx))
    throw ShapeMismatch("antisymmetric components need distinct indices");
  std::vector<std::size_t> order(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // enumerate both permutation groups via index orders
  std::vector<std::size_t> base_order = order;
  std::sort(base_order.begin(), base_order.end());
  do {
    int base_sign = 1;
    for (std::size_t i = 0; i < base_order.size(); ++i)
      for (std::size_t j = i + 1; j < base_order.size(); ++j)
        if (base_order[i] > base_order[j]) base_sign = -base_sign;
    std::vector<int> b(static_cast<std::size_t>(degree_));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = base_idx[base_order[i]];
    std::vector<std::size_t> fiber_order = order;
    do {
      int fiber_sign = 1;
      for (std::size_t i = 0; i < fiber_order.size(); ++i)
        for (std::size_t j = i + 1; j < fiber_order.size(); ++j)
          if (fiber_order[i] > fiber_order[j]) fiber_sign = -fiber_sign;
      std::vector<int> f(static_cast<std::size_t>(degree_));
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = fiber_idx[fiber_order[i]];
      comp_[flat(b, f)] = base_sign * fiber_sign * value;
    } while (std::next_permutation(fiber_order.begin(), fiber_order.end()));
  } while (std::next_permutation(base_order.begin(), base_order.end()));
}

FiberForm FiberForm::one_form(const RealMat4& xi) {
  FiberForm out(1);
  for (int lam = 0; lam < 4; ++lam)
    for (int a = 0; a < 4; ++a)
      out.comp_[out.flat({a}, {lam})] =
          xi[static_cast<std::size_t>(lam)][static_cast<std::size_t>(a)];
  return out;
}

FiberForm FiberForm::product_two_form(const RealMat4& base2, const RealMat4& fiber2) {
  FiberForm out(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int lam = 0; lam < 4; ++lam)
        for (int mu = 0; mu < 4; ++mu)
          out.comp_[out.flat({a, b}, {lam, mu})] =
              base2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
              fiber2[static_cast<std::size_t>(lam)][static_cast<std::size_t>(mu)];
  return out;
}

FiberForm operator+(const FiberForm& a, const FiberForm& b) {
  if (a.degree_ != b.degree_) throw ShapeMismatch("fiber-form degrees disagree");
  FiberForm out = a;
  for (std::size_t k = 0; k < out.comp_.size(); ++k) out.comp_[k] += b.comp_[k];
  return out;
}

FiberForm operator*(double s, const FiberForm& a) {
  FiberForm out = a;
  for (double& v : out.comp_) v *= s;
  return out;
}

ScaledReal theta_breve(const Tetrad& theta, const FiberForm& xi) {
  const int r = xi.degree();
  const int head = 4 - r;
  double sum = 0.0;
  std::vector<int> base_tail(static_cast<std::size_t>(r));
  std::vector<int> fiber_tail(static_cast<std::size_t>(r));
  for (const Perm4& pa : perms4())
    for (const Perm4& pl : perms4()) {
      double product = static_cast<double>(pa.sign * pl.sign);
      for (int i = 0; i < head; ++i)
        product *= theta.comp[static_cast<std::size_t>(pl.idx[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(pa.idx[static_cast<std::size_t>(i)])];
      if (product == 0.0) continue;
      for (int i = 0; i < r; ++i) {
        base_tail[static_cast<std::size_t>(i)] = pa.idx[static_cast<std::size_t>(head + i)];
        fiber_tail[static_cast<std::size_t>(i)] = pl.idx[static_cast<std::size_t>(head + i)];
      }
      sum += product * xi.at(base_tail, fiber_tail);
    }
  return {sum / factorial(head), dim_power(dim_length(), head)};
}

// =============================== mass shells =================================

void MassShellPoint::validate(double tol) const {
  if (mass < 0.0) throw OffShell("mass must be nonnegative");
  double norm = 0.0;
  for (double v : p) norm += v * v;
  const double shell = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
  if (std::abs(shell - mass * mass) > tol * std::max(1.0, norm))
    throw OffShell("momentum does not satisfy the mass-shell relation");
  if (p[0] <= 0.0) throw OffShell("momentum is not future-pointing");
}

Real4 MassShellPoint::p_sharp() const { return {p[0], -p[1], -p[2], -p[3]}; }

CxMatrix gamma_matrix_float(int lambda, WBasis basis) {
  return to_float_matrix(gamma_matrix(lambda, basis, default_frame()));
}

CxMatrix gamma_of_vector(const Real4& v, WBasis basis) {
  CxMatrix out(4);
  for (int lam = 0; lam < 4; ++lam) {
    const double coeff = v[static_cast<std::size_t>(lam)];
    if (coeff == 0.0) continue;
    out = out + Cx(coeff, 0.0) * gamma_matrix_float(lam, basis);
  }
  return out;
}

std::pair<CxMatrix, CxMatrix> mass_shell_projectors(const MassShellPoint& pt, WBasis basis) {
  pt.validate();
  if (pt.mass <= 0.0) throw MasslessShell("projector split needs a positive mass");
  const CxMatrix slash = gamma_of_vector(pt.p_sharp(), basis);
  const CxMatrix id = CxMatrix::identity(4);
  const Cx half(0.5, 0.0);
  const Cx half_over_m(0.5 / pt.mass, 0.0);
  return {half * id + half_over_m * slash, half * id - half_over_m * slash};
}

// ============================ pointwise operators ============================

CxVec4 dirac_operator_point(const Tetrad& theta, const std::array<CxVec4, 4>& dpsi,
                            WBasis basis) {
  const RealMat4 inv = theta.inverse();
  CxVec4 out{};
  for (int lam = 0; lam < 4; ++lam) {
    const CxMatrix gamma_up = Cx(kEta[lam], 0.0) * gamma_matrix_float(lam, basis);
    for (int a = 0; a < 4; ++a) {
      const double weight = inv[static_cast<std::size_t>(a)][static_cast<std::size_t>(lam)];
      if (weight == 0.0) continue;
      for (int row = 0; row < 4; ++row) {
        Cx acc(0.0, 0.0);
        for (int col = 0; col < 4; ++col)
          acc += gamma_up.at(row, col) * dpsi[static_cast<std::size_t>(a)][static_cast<std::size_t>(col)];
        out[static_cast<std::size_t>(row)] += weight * acc;
      }
    }
  }
  return out;
}

Cx k_pairing(const CxVec4& phi, const CxVec4& psi, WBasis basis) {
  const CxMatrix k = to_float_matrix(k_matrix(basis));
  Cx sum(0.0, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      sum += std::conj(phi[static_cast<std::size_t>(r)]) * k.at(r, c) *
             psi[static_cast<std::size_t>(c)];
  return sum;
}

CxMatrix interaction_matrix(int lambda, WBasis basis) {
  const CxMatrix k = to_float_matrix(k_matrix(basis));
  return Cx(-1.0, 0.0) * (k * gamma_matrix_float(lambda, basis));
}

Cx interaction_contraction(const CxVec4& phi, const Real4& a_vec, const CxVec4& psi,
                           WBasis basis) {
  Cx sum(0.0, 0.0);
  for (int lam = 0; lam < 4; ++lam) {
    const double coeff = a_vec[static_cast<std::size_t>(lam)];
    if (coeff == 0.0) continue;
    const CxMatrix slice = interaction_matrix(lam, basis);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        sum += coeff * std::conj(phi[static_cast<std::size_t>(r)]) * slice.at(r, c) *
               psi[static_cast<std::size_t>(c)];
  }
  return sum;
}

// ============================ pointwise Lagrangian ===========================

ECMDTerms ecmd_lagrangian_point(const ECMDData& data) {
  const ScaledReal det = det_theta(data.theta);

  // gravity: the fiber contraction of the input curvature over the coupling
  const ScaledReal coupling{data.grav_coupling, dim_power(dim_length(), 2)};
  const ScaledReal breve_r = theta_breve(data.theta, data.curvature);
  const ScaledReal l_g{breve_r.value / coupling.value,
                       dim_combine(breve_r.dim, dim_power(coupling.dim, -1))};

  // electromagnetism: (1/4) F^2 eta - (1/2) breve(dY (x) F#)
  const ScaleDim dim_f = dim_power(dim_length(), -2);
  double f_square = 0.0;
  RealMat4 f_up{};
  for (int lam = 0; lam < 4; ++lam)
    for (int mu = 0; mu < 4; ++mu) {
      const double raised = kEta[lam] * kEta[mu] *
                            data.f[static_cast<std::size_t>(lam)][static_cast<std::size_t>(mu)];
      f_up[static_cast<std::size_t>(lam)][static_cast<std::size_t>(mu)] = raised;
      f_square += data.f[static_cast<std::size_t>(lam)][static_cast<std::size_t>(mu)] * raised;
    }
  RealMat4 dy_form{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      dy_form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          0.5 * (data.dy[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                 data.dy[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
  const ScaledReal f2_term =
      ScaledReal{0.25 * f_square, dim_power(dim_f, 2)} * det;
  const ScaledReal breve_em =
      theta_breve(data.theta, FiberForm::product_two_form(dy_form, f_up));
  const ScaledReal cross_term =
      ScaledReal{-0.5, dim_dimensionless()} * ScaledReal{breve_em.value,
                                                         dim_combine(breve_em.dim, dim_f)};
  const ScaledReal l_em = f2_term + cross_term;

  // Dirac: the tetrad must invert even though the density contraction itself
  // does not use the inverse
  if (!data.theta.is_invertible())
    throw SingularTetrad("Dirac term needs an invertible soldering form");
  // The symmetrized kinetic pairing: the normalized Pauli frame absorbs a
  // 1/sqrt2 against the Clifford pairing, and with the i/sqrt2 prefactor the
  // surviving component is minus the imaginary part.  The normalization is
  // pinned by the vanishing of the whole term on plane-wave shell solutions.
  const ScaleDim dim_psi = dim_power(dim_length(), Rational(-3, 2));
  RealMat4 xi{};
  for (int lam = 0; lam < 4; ++lam) {
    const CxMatrix gamma_up = Cx(kEta[lam], 0.0) * gamma_matrix_float(lam, WBasis::dirac);
    for (int a = 0; a < 4; ++a) {
      CxVec4 gdpsi{};
      for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
          gdpsi[static_cast<std::size_t>(row)] +=
              gamma_up.at(row, col) *
              data.psi.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(col)];
      const Cx paired = k_pairing(data.psi.value, gdpsi, WBasis::dirac);
      xi[static_cast<std::size_t>(lam)][static_cast<std::size_t>(a)] = -paired.imag();
    }
  }
  const ScaledReal breve_d = theta_breve(data.theta, FiberForm::one_form(xi));
  const ScaledReal kinetic{breve_d.value,
                           dim_combine(breve_d.dim, dim_power(dim_psi, 2))};
  const double psibar_psi = k_pairing(data.psi.value, data.psi.value, WBasis::dirac).real();
  const ScaledReal mass_term =
      ScaledReal{-data.mass, dim_power(dim_length(), -1)} *
      ScaledReal{psibar_psi, dim_power(dim_psi, 2)} * det;
  const ScaledReal l_d = kinetic + mass_term;

  return {l_g, l_em, l_d};
}

}  // namespace ewgeom

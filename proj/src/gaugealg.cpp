#include "ewgeom/gaugealg.hpp"

namespace ewgeom {

namespace {

void check_base_dim(int base_dim) {
  if (base_dim < 1 || base_dim > 4) throw ShapeMismatch("base dimension 1..4 expected");
}

// formal division by q^2, valid because curvature tables are multiples of q
Poly divide_by_charge_squared(const Poly& p, int qvar) {
  Poly out(p.nvars());
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps[qvar] < 2)
      throw ZeroCharge("Lagrangian normalization divides by the squared charge");
    Poly::Exponents shifted = exps;
    shifted[qvar] -= 2;
    out.add_term(shifted, coeff);
  }
  return out;
}

}  // namespace

std::vector<std::string> charged_names(int base_dim) {
  check_base_dim(base_dim);
  std::vector<std::string> names;
  for (int a = 1; a <= base_dim; ++a) names.push_back("x" + std::to_string(a));
  names.push_back("q");
  return names;
}

Poly charge_poly(int base_dim) {
  check_base_dim(base_dim);
  return Poly::variable(base_dim + 1, base_dim);
}

ChargedField::ChargedField(int base, int frame, std::vector<std::vector<Poly>> comps)
    : base_dim(base), frame_dim(frame), components(std::move(comps)) {
  check_base_dim(base_dim);
  if (frame_dim < 1 || frame_dim > 8) throw ShapeMismatch("frame dimension 1..8 expected");
  if (static_cast<int>(components.size()) != base_dim)
    throw ShapeMismatch("one strength row per base direction expected");
  for (const auto& row : components) {
    if (static_cast<int>(row.size()) != frame_dim)
      throw ShapeMismatch("one strength per frame direction expected");
    for (const auto& p : row) {
      if (p.nvars() != base_dim + 1) throw ChartMismatch("strengths live in x1..xn, q");
      if (p.degree_in(base_dim) != 0)
        throw ShapeMismatch("strengths must not involve the charge");
    }
  }
}

CurvatureTable charged_curvature(
    const ChargedField& field, const std::vector<std::vector<std::vector<ExactComplex>>>& c) {
  const int n = field.base_dim;
  const int m = field.frame_dim;
  if (static_cast<int>(c.size()) != m)
    throw ShapeMismatch("structure constants must match the frame dimension");
  for (const auto& plane : c) {
    if (static_cast<int>(plane.size()) != m)
      throw ShapeMismatch("structure constants must match the frame dimension");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != m)
        throw ShapeMismatch("structure constants must match the frame dimension");
  }
  const Poly q = charge_poly(n);
  const Poly q2 = q * q;
  const ExactComplex half(Rational(1, 2));
  CurvatureTable curv(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(m, Poly(n + 1))));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int i = 0; i < m; ++i) {
        // -q d_[a X_b]^i with the half-weight antisymmetrization
        Poly value = -(q * (half * (field.components[b][i].partial(a) -
                                    field.components[a][i].partial(b))));
        Poly quad(n + 1);
        for (int h = 0; h < m; ++h)
          for (int j = 0; j < m; ++j) {
            const ExactComplex& chji = c[h][j][i];
            if (chji.is_zero()) continue;
            quad = quad + chji * (field.components[a][h] * field.components[b][j]);
          }
        value = value + q2 * quad;
        curv[a][b][i] = value;
        curv[b][a][i] = -value;
      }
  return curv;
}

Poly gauge_lagrangian(const ChargedField& field, const CurvatureTable& curvature,
                      const SquareMatrix<ExactComplex>& g_inv) {
  const int n = field.base_dim;
  const int m = field.frame_dim;
  if (g_inv.extent() != n) throw ShapeMismatch("metric inverse must match the base dimension");
  if (static_cast<int>(curvature.size()) != n)
    throw ShapeMismatch("curvature table must match the base dimension");
  for (const auto& row : curvature) {
    if (static_cast<int>(row.size()) != n)
      throw ShapeMismatch("curvature table must match the base dimension");
    for (const auto& cell : row)
      if (static_cast<int>(cell.size()) != m)
        throw ShapeMismatch("curvature table must match the frame dimension");
  }
  Poly sum(n + 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          const ExactComplex weight = g_inv.at(a, cc) * g_inv.at(b, d);
          if (weight.is_zero()) continue;
          for (int i = 0; i < m; ++i) {
            const Poly& left = curvature[a][b][i];
            const Poly& right = curvature[cc][d][i];
            if (left.is_zero() || right.is_zero()) continue;
            sum = sum + weight * (left * right);
          }
        }
  const ExactComplex minus_half(Rational(-1, 2));
  return divide_by_charge_squared(minus_half * sum, n);
}

Poly bind_charge(const Poly& p, int base_dim, const Rational& q) {
  check_base_dim(base_dim);
  if (p.nvars() != base_dim + 1) throw ChartMismatch("expected a polynomial in x1..xn, q");
  if (q == 0) throw ZeroCharge("charge must be nonzero");
  std::vector<Poly> repl;
  repl.reserve(static_cast<std::size_t>(base_dim) + 1);
  for (int v = 0; v < base_dim; ++v) repl.push_back(Poly::variable(base_dim, v));
  repl.push_back(Poly::constant(base_dim, ExactComplex(q)));
  return p.substitute(repl);
}

std::vector<Poly> charge_power(const std::vector<Poly>& y, int p) {
  std::vector<Poly> out;
  out.reserve(y.size());
  for (const auto& coeff : y) out.push_back(ExactComplex(p) * coeff);
  return out;
}

}  // namespace ewgeom

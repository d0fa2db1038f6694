#pragma once
// Gauge-algebra toolkit: the trace form K on endomorphisms, K-orthonormal
// frames of anti-Hermitian matrix Lie algebras, structure constants, charged
// curvature tables, the gauge Lagrangian scalar, and charge powers of
// line-bundle coefficients.
//
// Charge convention: the coupling q is carried symbolically as one extra
// trailing polynomial variable, so the q-grading of derived quantities
// (kinetic / cubic / quartic) is directly inspectable; numeric charges are
// bound via bind_charge.

#include <cmath>
#include <vector>

#include "cxmulti.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace ewgeom {

// K(X,Y) = -2 Tr(X Y): positive-definite on anti-Hermitian matrices
template <typename T>
T killing_like(const SquareMatrix<T>& x, const SquareMatrix<T>& y) {
  if (x.extent() != y.extent()) throw ShapeMismatch("trace form needs equal extents");
  return T(-2) * (x * y).trace();
}

// genuine Killing form of the algebra of all endomorphisms of an n-space,
// K(A,B) = Tr(ad_A ad_B) = 2n Tr(A B) - 2 Tr A Tr B
template <typename T>
T killing_true(const SquareMatrix<T>& x, const SquareMatrix<T>& y) {
  if (x.extent() != y.extent()) throw ShapeMismatch("trace form needs equal extents");
  const T n(2 * x.extent());
  return n * (x * y).trace() - T(2) * x.trace() * y.trace();
}

namespace detail {

inline bool exactly_zero(const ExactComplex& v, double) { return v.is_zero(); }
inline bool exactly_zero(const Cx& v, double tol) { return std::abs(v) <= tol; }

inline double magnitude(const ExactComplex& v) {
  const Cx c = v.to_complex();
  return std::abs(c);
}
inline double magnitude(const Cx& v) { return std::abs(v); }

}  // namespace detail

// X is anti-Hermitian for the metric h when X^+ h + h X = 0; the float
// backend compares against tol * scale of the operands
template <typename T>
bool is_anti_hermitian(const SquareMatrix<T>& x, const SquareMatrix<T>& h,
                       double tol = 1e-12) {
  const SquareMatrix<T> residual = x.dagger() * h + h * x;
  if constexpr (std::is_same_v<T, ExactComplex>) {
    (void)tol;
    return residual.is_zero();
  } else {
    const double scale = std::max(1.0, x.max_abs() * h.max_abs());
    return residual.max_abs() <= tol * scale;
  }
}

template <typename T>
bool is_anti_hermitian(const SquareMatrix<T>& x, double tol = 1e-12) {
  return is_anti_hermitian(x, SquareMatrix<T>::identity(x.extent()), tol);
}

// ================================= LieFrame ==================================

template <typename T>
struct LieFrame {
  std::vector<SquareMatrix<T>> generators;  // K-orthonormal once built
  SquareMatrix<T> metric;                   // Hermitian structure h (identity by default)

  int matrix_extent() const {
    return generators.empty() ? 0 : generators.front().extent();
  }
  int size() const { return static_cast<int>(generators.size()); }
};

// Gram-Schmidt with respect to K over the real span of the generators.
// Exact backend: K-norms must be squares (or twice squares) in the scalar
// field; float backend: tolerance-based dependency detection.
template <typename T>
LieFrame<T> orthonormalize(const std::vector<SquareMatrix<T>>& generators,
                           const SquareMatrix<T>& h) {
  if (generators.empty()) throw ShapeMismatch("at least one generator expected");
  const int n = generators.front().extent();
  double scale = 0.0;
  for (const auto& g : generators) {
    if (g.extent() != n) throw ShapeMismatch("generator extents disagree");
    if (!is_anti_hermitian(g, h)) throw NotHermitian("anti-Hermitian generator expected");
    scale = std::max(scale, detail::magnitude(killing_like(g, g)));
  }
  LieFrame<T> frame;
  frame.metric = h;
  for (const auto& g : generators) {
    SquareMatrix<T> v = g;
    for (const auto& e : frame.generators) v = v - killing_like(v, e) * e;
    const T norm_sq = killing_like(v, v);
    if constexpr (std::is_same_v<T, ExactComplex>) {
      if (norm_sq.is_zero()) throw DependentGenerators("generator lies in the earlier span");
      if (!norm_sq.is_rational())
        throw NotRepresentable("K-norm has no square root in the scalar field");
      const ExactComplex norm = sqrt_rational_q2(norm_sq.a.re);
      v = norm.inverse() * v;
    } else {
      const double ns = norm_sq.real();
      if (ns <= 1e-20 * std::max(1.0, scale))
        throw DependentGenerators("generator lies in the earlier span");
      v = T(1.0 / std::sqrt(ns)) * v;
    }
    frame.generators.push_back(v);
  }
  return frame;
}

template <typename T>
LieFrame<T> orthonormalize(const std::vector<SquareMatrix<T>>& generators) {
  if (generators.empty()) throw ShapeMismatch("at least one generator expected");
  return orthonormalize(generators, SquareMatrix<T>::identity(generators.front().extent()));
}

// c_{hj}^k from [l_h, l_j] = c_{hj}^k l_k, read off with K against the frame;
// NotClosed when a commutator leaves the span
template <typename T>
std::vector<std::vector<std::vector<T>>> structure_constants(const LieFrame<T>& frame) {
  const std::size_t m = frame.generators.size();
  std::vector<std::vector<std::vector<T>>> c(
      m, std::vector<std::vector<T>>(m, std::vector<T>(m, T(0))));
  double scale = 0.0;
  for (const auto& g : frame.generators)
    scale = std::max(scale, detail::magnitude(killing_like(g, g)));
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t j = 0; j < m; ++j) {
      const SquareMatrix<T> comm = commutator(frame.generators[h], frame.generators[j]);
      SquareMatrix<T> residual = comm;
      for (std::size_t k = 0; k < m; ++k) {
        const T coeff = killing_like(frame.generators[k], comm);
        c[h][j][k] = coeff;
        residual = residual - coeff * frame.generators[k];
      }
      if constexpr (std::is_same_v<T, ExactComplex>) {
        if (!residual.is_zero()) throw NotClosed("commutator leaves the frame span");
      } else {
        if (residual.max_abs() > 1e-10 * std::max(1.0, scale))
          throw NotClosed("commutator leaves the frame span");
      }
    }
  return c;
}

// =============================== charged fields ==============================

// variable names for strength polynomials: x1..xn then the symbolic charge q
std::vector<std::string> charged_names(int base_dim);
// the symbolic charge as a polynomial in that arity
Poly charge_poly(int base_dim);

struct ChargedField {
  int base_dim = 0;   // spacetime directions, 1..4
  int frame_dim = 0;  // gauge-frame directions
  // strengths X_a^i: polynomials in x1..xn (arity base_dim+1, q unused)
  std::vector<std::vector<Poly>> components;

  ChargedField() = default;
  ChargedField(int base, int frame, std::vector<std::vector<Poly>> comps);
};

using CurvatureTable = std::vector<std::vector<std::vector<Poly>>>;  // [a][b][i]

// wedge-expansion curvature coefficients of the connection q X_a^i l_i:
// R_ab^i = -q d_[a X_b]^i + q^2 X_a^h X_b^j c_hj^i, with the half-weight
// antisymmetrization d_[a X_b] = (d_a X_b - d_b X_a)/2
CurvatureTable charged_curvature(const ChargedField& field,
                                 const std::vector<std::vector<std::vector<ExactComplex>>>& c);

// l[X] = -(1/(2 q^2)) g^{ac} g^{bd} delta_ij R_ab^i R_cd^j: a polynomial in
// the base point and q with q-degrees in {0,1,2}
Poly gauge_lagrangian(const ChargedField& field, const CurvatureTable& curvature,
                      const SquareMatrix<ExactComplex>& g_inv);

// substitute a numeric charge for the symbolic q variable
Poly bind_charge(const Poly& p, int base_dim, const Rational& q);

// induced line-bundle coefficient on the p-th tensor power: Y_a -> p Y_a
std::vector<Poly> charge_power(const std::vector<Poly>& y, int p);

}  // namespace ewgeom

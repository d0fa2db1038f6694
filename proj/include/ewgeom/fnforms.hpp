#pragma once
// Tangent-valued differential forms on a fibered chart R^n x R^k, with the
// Frölicher–Nijenhuis bracket, connections, curvature, covariant differentials
// and gauge transformations.  All component functions are polynomials, so the
// bracket identities hold exactly.
//
// Conventions pinned here and relied on throughout:
//   * chart directions are numbered 0..n-1 (base, variables x1..xn) then
//     n..n+k-1 (fiber, variables y1..yk); polynomial variable v matches
//     direction v.
//   * antisymmetric components are stored at strictly increasing index
//     tuples; component() resolves arbitrary tuples with the permutation
//     sign (zero on a repeated index).
//   * the bracket of an r-form and an s-form antisymmetrizes the four-term
//     integrand over all r+s form indices with unit weight 1/(r+s)!.
//   * scalar-form operators use the matching unit-weight conventions:
//     (dT) = Alt(dT/dx), (a ^ b) = Alt(a (x) b), (i_v T) = r v^c T_{c...},
//     L_u = d i_u + i_u d.  With these weights the bracket of decomposable
//     forms agrees term-by-term with its coordinate-free characterization.

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace ewgeom {

// ================================== Chart ====================================
// A single fibered chart R^base_dim x R^fiber_dim; no atlas machinery.

struct Chart {
  int base_dim = 0;   // 1..4
  int fiber_dim = 0;  // 1..8

  Chart() = default;
  Chart(int n, int k) : base_dim(n), fiber_dim(k) {
    if (n < 1 || n > 4) throw ShapeMismatch("base dimension must be in 1..4");
    if (k < 1 || k > 8) throw ShapeMismatch("fiber dimension must be in 1..8");
  }

  int total_dim() const { return base_dim + fiber_dim; }
  bool is_base(int dir) const { return dir >= 0 && dir < base_dim; }
  bool is_fiber(int dir) const { return dir >= base_dim && dir < total_dim(); }

  // polynomial variable names, x1..xn then y1..yk
  std::vector<std::string> names() const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.base_dim == b.base_dim && a.fiber_dim == b.fiber_dim;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }
};

using IdxTuple = std::vector<int>;  // form indices, canonical = strictly increasing

// sorts the tuple in place; returns +1/-1 for the permutation used, 0 if an
// index repeats
int normalize_tuple(IdxTuple& t);

// all strictly increasing tuples of the given size drawn from 0..limit-1
std::vector<IdxTuple> increasing_tuples(int limit, int size);

// ================================ ScalarForm =================================
// Antisymmetric covariant form with polynomial components (no value index).
// Used for the decomposable-bracket characterization and for field strengths.

class ScalarForm {
 public:
  ScalarForm() = default;
  ScalarForm(const Chart& chart, int degree);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }

  // component at an arbitrary tuple, resolved by antisymmetry
  Poly component(const IdxTuple& idx) const;
  // overwrite the component at a strictly increasing tuple
  void set(const IdxTuple& idx, const Poly& value);
  // add into the component at an arbitrary tuple (sign-resolved)
  void add(const IdxTuple& idx, const Poly& value);

  bool is_zero() const;

  friend ScalarForm operator+(const ScalarForm& a, const ScalarForm& b);
  friend ScalarForm operator-(const ScalarForm& a, const ScalarForm& b);
  friend ScalarForm operator*(const Poly& s, const ScalarForm& a);
  friend bool operator==(const ScalarForm& a, const ScalarForm& b);

 private:
  friend class TVForm;
  void check_same(const ScalarForm& b) const;
  Chart chart_;
  int degree_ = 0;
  // strictly increasing tuple -> component; absent = zero
  std::vector<std::pair<IdxTuple, Poly>> comps_;
  Poly* find(const IdxTuple& idx);
  const Poly* find(const IdxTuple& idx) const;
};

// (dT)_{a0..ar} = unit-weight alternation of d_{a0} T_{a1..ar}
ScalarForm exterior_differential(const ScalarForm& t);
// (a ^ b) = unit-weight alternation of the tensor product
ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);

// ================================== TVForm ===================================
// Tangent-valued r-form: components phi^b_{a1..ar}, with both the form
// indices a and the value index b running over every chart direction.

class TVForm {
 public:
  TVForm() = default;
  TVForm(const Chart& chart, int degree);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }

  // component at an arbitrary tuple, resolved by antisymmetry
  Poly component(const IdxTuple& idx, int b) const;
  // overwrite the component at a strictly increasing tuple
  void set(const IdxTuple& idx, int b, const Poly& value);
  // add into the component at an arbitrary tuple (sign-resolved)
  void add(const IdxTuple& idx, int b, const Poly& value);

  bool is_zero() const;

  // no form index along a fiber direction
  bool is_basic() const;
  // value along a fiber direction only
  bool is_vertical_valued() const;
  // basic, and the base-direction part of the value is independent of the
  // fiber coordinates (so it projects to a form on the base)
  bool is_projectable() const;
  // projectable, and the fiber-direction part of the value is homogeneous of
  // degree one in the fiber coordinates with base-only coefficients
  bool is_linear() const;

  friend TVForm operator+(const TVForm& a, const TVForm& b);
  friend TVForm operator-(const TVForm& a, const TVForm& b);
  friend TVForm operator*(const Poly& s, const TVForm& a);
  friend bool operator==(const TVForm& a, const TVForm& b);

 private:
  void check_same(const TVForm& b) const;
  Chart chart_;
  int degree_ = 0;
  // strictly increasing tuple -> one component polynomial per value direction
  std::vector<std::pair<IdxTuple, std::vector<Poly>>> comps_;
  std::vector<Poly>* find(const IdxTuple& idx);
  const std::vector<Poly>* find(const IdxTuple& idx) const;
};

// decomposable tangent-valued form alpha (x) u from a scalar form and a
// degree-0 vector field
TVForm tv_from(const ScalarForm& alpha, const TVForm& u);

// (i_v T)_{a2..ar} = r v^c T_{c a2..ar} for a degree-0 vector field v
ScalarForm interior(const TVForm& v, const ScalarForm& t);
// Lie derivative along a degree-0 vector field, L_u = d i_u + i_u d
ScalarForm lie_derivative(const TVForm& u, const ScalarForm& t);

// The Frölicher–Nijenhuis bracket: unit-weight antisymmetrization, over all
// r+s form indices, of
//   phi^c_{a1..ar} d_c psi^b_{..}  -  (-1)^{rs} psi^c_{a1..as} d_c phi^b_{..}
//   - r phi^b_{a1..c} d_{ar} psi^c_{..}  +  (-1)^{rs} s psi^b_{a1..c} d_{as} phi^c_{..}
// For two degree-0 fields this is the Lie bracket.
TVForm fn_bracket(const TVForm& phi, const TVForm& psi);

// ================================ Connection =================================
// gamma = dx^a (x) (dx_a + gamma_a^i dy_i): a tangent 1-form projectable over
// the identity.  Stored as the coefficient table gamma_a^i.

class Connection {
 public:
  Connection() = default;
  explicit Connection(const Chart& chart);  // flat coordinate connection (zero table)
  Connection(const Chart& chart, std::vector<std::vector<Poly>> coefficients);
  // linear connection from base-dim many fiber_dim x fiber_dim coefficient
  // matrices Gamma_a with entries gamma_a^i_j(x)
  static Connection linear(const Chart& chart, const std::vector<PolyMatrix>& matrices);

  const Chart& chart() const { return chart_; }
  // gamma_a^i, a in 0..base_dim-1, i in 0..fiber_dim-1
  const Poly& coefficient(int a, int i) const;
  bool is_linear() const;
  // Gamma_a = [gamma_a^i_j] for a linear connection
  PolyMatrix coefficient_matrix(int a) const;

  TVForm as_tvform() const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.chart_ == b.chart_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Chart chart_;
  std::vector<std::vector<Poly>> coeffs_;  // [a][i]
};

// R = -[gamma, gamma]: a basic vertical-valued 2-form
TVForm curvature(const Connection& gamma);

// curvature coefficient table R_ab^i_j of a linear connection, read off the
// bracket result; entry [a][b] is a fiber_dim x fiber_dim matrix, a < b
std::vector<std::vector<PolyMatrix>> curvature_matrices(const Connection& gamma);

// (nabla s)_a^i = d_a s^i - gamma_a^i with the fiber coordinates replaced by
// the section components; result indexed [a][i]
std::vector<std::vector<Poly>> covariant_differential(const Connection& gamma,
                                                      const std::vector<Poly>& section);

// frame change of a linear connection by an invertible polynomial matrix with
// constant nonzero determinant: Gamma'_a = S Gamma_a S^-1 + (d_a S) S^-1
Connection gauge_transform(const Connection& gamma, const PolyMatrix& S);

// difference tensor alpha = gamma - gamma0 (basic, vertical-valued, degree 1)
TVForm decompose_alpha(const Connection& gamma, const Connection& gamma0);
// inverse of decompose_alpha: gamma0 + alpha as a connection
Connection reconstruct(const Connection& gamma0, const TVForm& alpha);

}  // namespace ewgeom

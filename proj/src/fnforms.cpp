#include "ewgeom/fnforms.hpp"

#include <algorithm>
#include <numeric>

namespace ewgeom {

std::vector<std::string> Chart::names() const {
  std::vector<std::string> out;
  for (int a = 1; a <= base_dim; ++a) out.push_back("x" + std::to_string(a));
  for (int i = 1; i <= fiber_dim; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

int normalize_tuple(IdxTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

std::vector<IdxTuple> increasing_tuples(int limit, int size) {
  std::vector<IdxTuple> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  if (size > limit) return out;
  IdxTuple t(static_cast<std::size_t>(size));
  std::iota(t.begin(), t.end(), 0);
  while (true) {
    out.push_back(t);
    int pos = size - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == limit - size + pos) --pos;
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < size; ++q)
      t[static_cast<std::size_t>(q)] = t[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

namespace {

long factorial(int m) {
  long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

void check_index_arity(const Chart& chart, const IdxTuple& idx, int degree) {
  if (static_cast<int>(idx.size()) != degree) throw ShapeMismatch("wrong number of form indices");
  for (int a : idx)
    if (a < 0 || a >= chart.total_dim()) throw ShapeMismatch("form index out of range");
}

void check_increasing(const IdxTuple& idx) {
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] <= idx[i - 1]) throw ShapeMismatch("storage tuple must be strictly increasing");
}

IdxTuple slice(const IdxTuple& t, int from, int to) {
  return IdxTuple(t.begin() + from, t.begin() + to);
}

// sign of the permutation (listed as images of 0..m-1) by inversion count
int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

// ================================ ScalarForm =================================

ScalarForm::ScalarForm(const Chart& chart, int degree) : chart_(chart), degree_(degree) {
  if (degree < 0 || degree > chart.total_dim())
    throw DegreeMismatch("scalar form degree must be in 0..total_dim");
}

void ScalarForm::check_same(const ScalarForm& b) const {
  if (chart_ != b.chart_) throw ChartMismatch("scalar forms live on different charts");
  if (degree_ != b.degree_) throw DegreeMismatch("scalar form degrees disagree");
}

Poly* ScalarForm::find(const IdxTuple& idx) {
  for (auto& [t, p] : comps_)
    if (t == idx) return &p;
  return nullptr;
}

const Poly* ScalarForm::find(const IdxTuple& idx) const {
  for (const auto& [t, p] : comps_)
    if (t == idx) return &p;
  return nullptr;
}

Poly ScalarForm::component(const IdxTuple& idx) const {
  check_index_arity(chart_, idx, degree_);
  IdxTuple key = idx;
  const int sign = normalize_tuple(key);
  if (sign == 0) return Poly(chart_.total_dim());
  const Poly* p = find(key);
  if (p == nullptr) return Poly(chart_.total_dim());
  return sign == 1 ? *p : -*p;
}

void ScalarForm::set(const IdxTuple& idx, const Poly& value) {
  check_index_arity(chart_, idx, degree_);
  check_increasing(idx);
  if (value.nvars() != chart_.total_dim()) throw ChartMismatch("component arity mismatch");
  if (Poly* p = find(idx)) {
    *p = value;
    return;
  }
  comps_.emplace_back(idx, value);
}

void ScalarForm::add(const IdxTuple& idx, const Poly& value) {
  check_index_arity(chart_, idx, degree_);
  if (value.nvars() != chart_.total_dim()) throw ChartMismatch("component arity mismatch");
  IdxTuple key = idx;
  const int sign = normalize_tuple(key);
  if (sign == 0) return;  // repeated index: no antisymmetric part to add to
  const Poly signed_value = sign == 1 ? value : -value;
  if (Poly* p = find(key)) {
    *p = *p + signed_value;
    return;
  }
  comps_.emplace_back(key, signed_value);
}

bool ScalarForm::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const auto& e) { return e.second.is_zero(); });
}

ScalarForm operator+(const ScalarForm& a, const ScalarForm& b) {
  a.check_same(b);
  ScalarForm out = a;
  for (const auto& [t, p] : b.comps_) out.add(t, p);
  return out;
}

ScalarForm operator-(const ScalarForm& a, const ScalarForm& b) {
  a.check_same(b);
  ScalarForm out = a;
  for (const auto& [t, p] : b.comps_) out.add(t, -p);
  return out;
}

ScalarForm operator*(const Poly& s, const ScalarForm& a) {
  ScalarForm out(a.chart_, a.degree_);
  for (const auto& [t, p] : a.comps_) out.set(t, s * p);
  return out;
}

bool operator==(const ScalarForm& a, const ScalarForm& b) {
  if (a.chart_ != b.chart_ || a.degree_ != b.degree_) return false;
  for (const IdxTuple& t : increasing_tuples(a.chart_.total_dim(), a.degree_))
    if (a.component(t) != b.component(t)) return false;
  return true;
}

ScalarForm exterior_differential(const ScalarForm& t) {
  const int r = t.degree();
  const Chart& chart = t.chart();
  // the alternation of a derivative of an antisymmetric tensor collapses to
  // the alternating sum over which index carries the derivative, / (r+1)
  ScalarForm out(chart, r + 1);
  const ExactComplex weight(Rational(1, r + 1));
  for (const IdxTuple& a : increasing_tuples(chart.total_dim(), r + 1)) {
    Poly total(chart.total_dim());
    for (int j = 0; j <= r; ++j) {
      IdxTuple rest = a;
      rest.erase(rest.begin() + j);
      Poly term = t.component(rest).partial(a[static_cast<std::size_t>(j)]);
      total = (j % 2 == 0) ? total + term : total - term;
    }
    out.set(a, weight * total);
  }
  return out;
}

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
  if (a.chart() != b.chart()) throw ChartMismatch("wedge operands live on different charts");
  const Chart& chart = a.chart();
  const int r = a.degree(), s = b.degree();
  // both factors are antisymmetric, so the unit-weight alternation collapses
  // to a signed sum over r-subsets weighted by r!s!/(r+s)!
  ScalarForm out(chart, r + s);
  const ExactComplex weight(Rational(factorial(r) * factorial(s), factorial(r + s)));
  const std::vector<IdxTuple> splits = increasing_tuples(r + s, r);
  for (const IdxTuple& t : increasing_tuples(chart.total_dim(), r + s)) {
    Poly total(chart.total_dim());
    for (const IdxTuple& positions : splits) {
      IdxTuple left, right;
      std::vector<bool> taken(static_cast<std::size_t>(r + s), false);
      for (int p : positions) {
        left.push_back(t[static_cast<std::size_t>(p)]);
        taken[static_cast<std::size_t>(p)] = true;
      }
      int sign = 1;
      for (int p = 0; p < r + s; ++p) {
        if (taken[static_cast<std::size_t>(p)]) continue;
        right.push_back(t[static_cast<std::size_t>(p)]);
        // parity of moving this position past the left-block entries after it
        for (int q : positions)
          if (q > p) sign = -sign;
      }
      const Poly pa = a.component(left);
      if (pa.is_zero()) continue;
      const Poly pb = b.component(right);
      if (pb.is_zero()) continue;
      total = (sign == 1) ? total + pa * pb : total - pa * pb;
    }
    out.set(t, weight * total);
  }
  return out;
}

// ================================== TVForm ===================================

TVForm::TVForm(const Chart& chart, int degree) : chart_(chart), degree_(degree) {
  if (degree < 0 || degree > chart.total_dim())
    throw DegreeMismatch("tangent-valued form degree must be in 0..total_dim");
}

void TVForm::check_same(const TVForm& b) const {
  if (chart_ != b.chart_) throw ChartMismatch("forms live on different charts");
  if (degree_ != b.degree_) throw DegreeMismatch("form degrees disagree");
}

std::vector<Poly>* TVForm::find(const IdxTuple& idx) {
  for (auto& [t, v] : comps_)
    if (t == idx) return &v;
  return nullptr;
}

const std::vector<Poly>* TVForm::find(const IdxTuple& idx) const {
  for (const auto& [t, v] : comps_)
    if (t == idx) return &v;
  return nullptr;
}

Poly TVForm::component(const IdxTuple& idx, int b) const {
  check_index_arity(chart_, idx, degree_);
  if (b < 0 || b >= chart_.total_dim()) throw ShapeMismatch("value index out of range");
  IdxTuple key = idx;
  const int sign = normalize_tuple(key);
  if (sign == 0) return Poly(chart_.total_dim());
  const std::vector<Poly>* v = find(key);
  if (v == nullptr) return Poly(chart_.total_dim());
  const Poly& p = (*v)[static_cast<std::size_t>(b)];
  return sign == 1 ? p : -p;
}

void TVForm::set(const IdxTuple& idx, int b, const Poly& value) {
  check_index_arity(chart_, idx, degree_);
  check_increasing(idx);
  if (b < 0 || b >= chart_.total_dim()) throw ShapeMismatch("value index out of range");
  if (value.nvars() != chart_.total_dim()) throw ChartMismatch("component arity mismatch");
  std::vector<Poly>* v = find(idx);
  if (v == nullptr) {
    comps_.emplace_back(idx, std::vector<Poly>(static_cast<std::size_t>(chart_.total_dim()),
                                               Poly(chart_.total_dim())));
    v = &comps_.back().second;
  }
  (*v)[static_cast<std::size_t>(b)] = value;
}

void TVForm::add(const IdxTuple& idx, int b, const Poly& value) {
  IdxTuple key = idx;
  const int sign = normalize_tuple(key);
  if (sign == 0) return;
  const Poly signed_value = sign == 1 ? value : -value;
  set(key, b, component(key, b) + signed_value);
}

bool TVForm::is_zero() const {
  for (const auto& [t, v] : comps_)
    for (const Poly& p : v)
      if (!p.is_zero()) return false;
  return true;
}

bool TVForm::is_basic() const {
  for (const auto& [t, v] : comps_) {
    const bool has_fiber_index =
        std::any_of(t.begin(), t.end(), [&](int a) { return chart_.is_fiber(a); });
    if (!has_fiber_index) continue;
    for (const Poly& p : v)
      if (!p.is_zero()) return false;
  }
  return true;
}

bool TVForm::is_vertical_valued() const {
  for (const auto& [t, v] : comps_)
    for (int b = 0; b < chart_.base_dim; ++b)
      if (!v[static_cast<std::size_t>(b)].is_zero()) return false;
  return true;
}

bool TVForm::is_projectable() const {
  if (!is_basic()) return false;
  const int n = chart_.base_dim, total = chart_.total_dim();
  for (const auto& [t, v] : comps_)
    for (int b = 0; b < n; ++b)
      if (v[static_cast<std::size_t>(b)].degree_in_range(n, total) != 0) return false;
  return true;
}

bool TVForm::is_linear() const {
  if (!is_projectable()) return false;
  const int n = chart_.base_dim, total = chart_.total_dim();
  for (const auto& [t, v] : comps_)
    for (int b = n; b < total; ++b)
      if (!v[static_cast<std::size_t>(b)].homogeneous_in_range(n, total, 1)) return false;
  return true;
}

TVForm operator+(const TVForm& a, const TVForm& b) {
  a.check_same(b);
  TVForm out = a;
  for (const auto& [t, v] : b.comps_)
    for (std::size_t bi = 0; bi < v.size(); ++bi)
      if (!v[bi].is_zero()) out.add(t, static_cast<int>(bi), v[bi]);
  return out;
}

TVForm operator-(const TVForm& a, const TVForm& b) {
  a.check_same(b);
  TVForm out = a;
  for (const auto& [t, v] : b.comps_)
    for (std::size_t bi = 0; bi < v.size(); ++bi)
      if (!v[bi].is_zero()) out.add(t, static_cast<int>(bi), -v[bi]);
  return out;
}

TVForm operator*(const Poly& s, const TVForm& a) {
  TVForm out(a.chart_, a.degree_);
  for (const auto& [t, v] : a.comps_)
    for (std::size_t bi = 0; bi < v.size(); ++bi)
      if (!v[bi].is_zero()) out.set(t, static_cast<int>(bi), s * v[bi]);
  return out;
}

bool operator==(const TVForm& a, const TVForm& b) {
  if (a.chart_ != b.chart_ || a.degree_ != b.degree_) return false;
  for (const IdxTuple& t : increasing_tuples(a.chart_.total_dim(), a.degree_))
    for (int bi = 0; bi < a.chart_.total_dim(); ++bi)
      if (a.component(t, bi) != b.component(t, bi)) return false;
  return true;
}

TVForm tv_from(const ScalarForm& alpha, const TVForm& u) {
  if (alpha.chart() != u.chart()) throw ChartMismatch("factors live on different charts");
  if (u.degree() != 0) throw DegreeMismatch("vector factor must have degree zero");
  TVForm out(alpha.chart(), alpha.degree());
  const int total = alpha.chart().total_dim();
  for (const IdxTuple& t : increasing_tuples(total, alpha.degree())) {
    const Poly a = alpha.component(t);
    if (a.is_zero()) continue;
    for (int b = 0; b < total; ++b) {
      const Poly ub = u.component({}, b);
      if (!ub.is_zero()) out.set(t, b, a * ub);
    }
  }
  return out;
}

ScalarForm interior(const TVForm& v, const ScalarForm& t) {
  if (v.chart() != t.chart()) throw ChartMismatch("operands live on different charts");
  if (v.degree() != 0) throw DegreeMismatch("interior product needs a degree-0 field");
  const Chart& chart = t.chart();
  const int r = t.degree();
  if (r == 0) return ScalarForm(chart, 0);  // no index to hook: zero by convention
  ScalarForm out(chart, r - 1);
  const ExactComplex weight(r);
  for (const IdxTuple& rest : increasing_tuples(chart.total_dim(), r - 1)) {
    Poly total(chart.total_dim());
    for (int c = 0; c < chart.total_dim(); ++c) {
      const Poly vc = v.component({}, c);
      if (vc.is_zero()) continue;
      IdxTuple full = rest;
      full.insert(full.begin(), c);
      const Poly tc = t.component(full);
      if (!tc.is_zero()) total = total + vc * tc;
    }
    out.set(rest, weight * total);
  }
  return out;
}

ScalarForm lie_derivative(const TVForm& u, const ScalarForm& t) {
  ScalarForm out = exterior_differential(interior(u, t));
  // at top degree the differential of t vanishes identically
  if (t.degree() < t.chart().total_dim()) out = out + interior(u, exterior_differential(t));
  return out;
}

TVForm fn_bracket(const TVForm& phi, const TVForm& psi) {
  if (phi.chart() != psi.chart()) throw ChartMismatch("bracket operands live on different charts");
  const Chart& chart = phi.chart();
  const int r = phi.degree(), s = psi.degree();
  if (r + s > chart.base_dim)
    throw DegreeMismatch("bracket degree exceeds the base dimension");
  const int m = r + s, total = chart.total_dim();
  const int sign_rs = (r * s) % 2 == 0 ? 1 : -1;

  // all permutations of the m tuple positions, with signs
  std::vector<std::pair<std::vector<int>, int>> perms;
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.emplace_back(p, perm_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));

  const ExactComplex weight(Rational(1, factorial(m)));
  TVForm out(chart, m);
  for (const IdxTuple& tuple : increasing_tuples(total, m)) {
    for (int b = 0; b < total; ++b) {
      Poly total_poly(total);
      for (const auto& [perm, sign] : perms) {
        IdxTuple c(static_cast<std::size_t>(m));
        for (int q = 0; q < m; ++q)
          c[static_cast<std::size_t>(q)] = tuple[static_cast<std::size_t>(perm[q])];
        Poly integrand(total);
        // phi^e d_e psi^b  -  (-1)^{rs} psi^e d_e phi^b
        const IdxTuple phi_front = slice(c, 0, r), psi_back = slice(c, r, m);
        const IdxTuple psi_front = slice(c, 0, s), phi_back = slice(c, s, m);
        for (int e = 0; e < total; ++e) {
          const Poly pe = phi.component(phi_front, e);
          if (!pe.is_zero()) {
            const Poly dpsi = psi.component(psi_back, b).partial(e);
            if (!dpsi.is_zero()) integrand = integrand + pe * dpsi;
          }
          const Poly qe = psi.component(psi_front, e);
          if (!qe.is_zero()) {
            const Poly dphi = phi.component(phi_back, b).partial(e);
            if (!dphi.is_zero())
              integrand = sign_rs == 1 ? integrand - qe * dphi : integrand + qe * dphi;
          }
        }
        // - r phi^b_{..e} d_{a_r} psi^e_{..}
        if (r >= 1) {
          const int deriv = c[static_cast<std::size_t>(r - 1)];
          for (int e = 0; e < total; ++e) {
            IdxTuple left = slice(c, 0, r - 1);
            left.push_back(e);
            const Poly pb = phi.component(left, b);
            if (pb.is_zero()) continue;
            const Poly dpsi = psi.component(psi_back, e).partial(deriv);
            if (!dpsi.is_zero()) integrand = integrand - ExactComplex(r) * (pb * dpsi);
          }
        }
        // + (-1)^{rs} s psi^b_{..e} d_{a_s} phi^e_{..}
        if (s >= 1) {
          const int deriv = c[static_cast<std::size_t>(s - 1)];
          for (int e = 0; e < total; ++e) {
            IdxTuple left = slice(c, 0, s - 1);
            left.push_back(e);
            const Poly qb = psi.component(left, b);
            if (qb.is_zero()) continue;
            const Poly dphi = phi.component(phi_back, e).partial(deriv);
            if (!dphi.is_zero()) {
              const Poly term = ExactComplex(s) * (qb * dphi);
              integrand = sign_rs == 1 ? integrand + term : integrand - term;
            }
          }
        }
        total_poly = sign == 1 ? total_poly + integrand : total_poly - integrand;
      }
      if (!total_poly.is_zero()) out.set(tuple, b, weight * total_poly);
    }
  }
  return out;
}

// ================================ Connection =================================

Connection::Connection(const Chart& chart) : chart_(chart) {
  coeffs_.assign(static_cast<std::size_t>(chart.base_dim),
                 std::vector<Poly>(static_cast<std::size_t>(chart.fiber_dim),
                                   Poly(chart.total_dim())));
}

Connection::Connection(const Chart& chart, std::vector<std::vector<Poly>> coefficients)
    : chart_(chart), coeffs_(std::move(coefficients)) {
  if (static_cast<int>(coeffs_.size()) != chart.base_dim)
    throw ShapeMismatch("one coefficient row per base direction expected");
  for (const auto& row : coeffs_) {
    if (static_cast<int>(row.size()) != chart.fiber_dim)
      throw ShapeMismatch("one coefficient per fiber direction expected");
    for (const Poly& p : row)
      if (p.nvars() != chart.total_dim()) throw ChartMismatch("coefficient arity mismatch");
  }
}

Connection Connection::linear(const Chart& chart, const std::vector<PolyMatrix>& matrices) {
  if (static_cast<int>(matrices.size()) != chart.base_dim)
    throw ShapeMismatch("one coefficient matrix per base direction expected");
  const int n = chart.base_dim, k = chart.fiber_dim, total = chart.total_dim();
  std::vector<std::vector<Poly>> coeffs(
      static_cast<std::size_t>(n),
      std::vector<Poly>(static_cast<std::size_t>(k), Poly(total)));
  for (int a = 0; a < n; ++a) {
    const PolyMatrix& mat = matrices[static_cast<std::size_t>(a)];
    if (mat.extent() != k) throw ShapeMismatch("coefficient matrix extent mismatch");
    if (mat.nvars() != total) throw ChartMismatch("coefficient matrix arity mismatch");
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const Poly& entry = mat.at(i, j);
        if (entry.degree_in_range(n, total) != 0)
          throw ShapeMismatch("linear coefficients must be base functions");
        coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
            coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +
            entry * Poly::variable(total, n + j);
      }
  }
  return Connection(chart, std::move(coeffs));
}

const Poly& Connection::coefficient(int a, int i) const {
  if (a < 0 || a >= chart_.base_dim || i < 0 || i >= chart_.fiber_dim)
    throw ShapeMismatch("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
}

bool Connection::is_linear() const {
  const int n = chart_.base_dim, total = chart_.total_dim();
  for (const auto& row : coeffs_)
    for (const Poly& p : row)
      if (!p.homogeneous_in_range(n, total, 1)) return false;
  return true;
}

PolyMatrix Connection::coefficient_matrix(int a) const {
  if (!is_linear()) throw NotRepresentable("connection is not linear in the fiber coordinates");
  const int n = chart_.base_dim, k = chart_.fiber_dim;
  PolyMatrix m(k, chart_.total_dim());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = coefficient(a, i).coefficient_of(n + j, 1);
  return m;
}

TVForm Connection::as_tvform() const {
  TVForm out(chart_, 1);
  const Poly one = Poly::constant(chart_.total_dim(), ExactComplex(1));
  for (int a = 0; a < chart_.base_dim; ++a) {
    out.set({a}, a, one);
    for (int i = 0; i < chart_.fiber_dim; ++i)
      out.set({a}, chart_.base_dim + i, coefficient(a, i));
  }
  return out;
}

TVForm curvature(const Connection& gamma) {
  if (gamma.chart().base_dim < 2) return TVForm(gamma.chart(), 2);  // no 2-form on one direction
  const TVForm g = gamma.as_tvform();
  const Poly minus_one = Poly::constant(gamma.chart().total_dim(), ExactComplex(-1));
  return minus_one * fn_bracket(g, g);
}

std::vector<std::vector<PolyMatrix>> curvature_matrices(const Connection& gamma) {
  if (!gamma.is_linear())
    throw NotRepresentable("connection is not linear in the fiber coordinates");
  const Chart& chart = gamma.chart();
  const int n = chart.base_dim, k = chart.fiber_dim, total = chart.total_dim();
  const TVForm big_r = curvature(gamma);
  std::vector<std::vector<PolyMatrix>> out(
      static_cast<std::size_t>(n),
      std::vector<PolyMatrix>(static_cast<std::size_t>(n), PolyMatrix(k, total)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      PolyMatrix& m = out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          m.at(i, j) = big_r.component({a, b}, n + i).coefficient_of(n + j, 1);
    }
  return out;
}

std::vector<std::vector<Poly>> covariant_differential(const Connection& gamma,
                                                      const std::vector<Poly>& section) {
  const Chart& chart = gamma.chart();
  const int n = chart.base_dim, k = chart.fiber_dim, total = chart.total_dim();
  if (static_cast<int>(section.size()) != k)
    throw ShapeMismatch("one section component per fiber direction expected");
  std::vector<Poly> replacement;
  for (int v = 0; v < n; ++v) replacement.push_back(Poly::variable(total, v));
  for (const Poly& s : section) {
    if (s.nvars() != total) throw ChartMismatch("section arity mismatch");
    if (s.degree_in_range(n, total) != 0)
      throw ShapeMismatch("section components must be base functions");
    replacement.push_back(s);
  }
  std::vector<std::vector<Poly>> out(
      static_cast<std::size_t>(n),
      std::vector<Poly>(static_cast<std::size_t>(k), Poly(total)));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < k; ++i)
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
          section[static_cast<std::size_t>(i)].partial(a) -
          gamma.coefficient(a, i).substitute(replacement);
  return out;
}

Connection gauge_transform(const Connection& gamma, const PolyMatrix& S) {
  const Chart& chart = gamma.chart();
  const int n = chart.base_dim, k = chart.fiber_dim, total = chart.total_dim();
  if (S.extent() != k) throw ShapeMismatch("frame-change matrix extent mismatch");
  if (S.nvars() != total) throw ChartMismatch("frame-change matrix arity mismatch");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (S.at(i, j).degree_in_range(n, total) != 0)
        throw ShapeMismatch("frame-change entries must be base functions");
  if (!gamma.is_linear())
    throw NotRepresentable("connection is not linear in the fiber coordinates");
  const Poly det = S.det();
  if (!det.is_constant() || det.constant_value().is_zero())
    throw NonConstantDeterminant("frame-change determinant must be a nonzero constant");
  const Poly inv_det = Poly::constant(total, det.constant_value().inverse());
  const PolyMatrix s_inv = inv_det * S.adjugate();
  std::vector<PolyMatrix> transformed;
  for (int a = 0; a < n; ++a)
    transformed.push_back(S * gamma.coefficient_matrix(a) * s_inv + S.partial(a) * s_inv);
  return Connection::linear(chart, transformed);
}

TVForm decompose_alpha(const Connection& gamma, const Connection& gamma0) {
  if (gamma.chart() != gamma0.chart())
    throw ChartMismatch("connections live on different charts");
  const Chart& chart = gamma.chart();
  TVForm alpha(chart, 1);
  for (int a = 0; a < chart.base_dim; ++a)
    for (int i = 0; i < chart.fiber_dim; ++i) {
      const Poly diff = gamma.coefficient(a, i) - gamma0.coefficient(a, i);
      if (!diff.is_zero()) alpha.set({a}, chart.base_dim + i, diff);
    }
  return alpha;
}

Connection reconstruct(const Connection& gamma0, const TVForm& alpha) {
  if (gamma0.chart() != alpha.chart())
    throw ChartMismatch("connection and difference tensor live on different charts");
  if (alpha.degree() != 1 || !alpha.is_basic() || !alpha.is_vertical_valued())
    throw ShapeMismatch("difference tensor must be a basic vertical-valued 1-form");
  const Chart& chart = gamma0.chart();
  std::vector<std::vector<Poly>> coeffs;
  for (int a = 0; a < chart.base_dim; ++a) {
    std::vector<Poly> row;
    for (int i = 0; i < chart.fiber_dim; ++i)
      row.push_back(gamma0.coefficient(a, i) + alpha.component({a}, chart.base_dim + i));
    coeffs.push_back(std::move(row));
  }
  return Connection(chart, std::move(coeffs));
}

}  // namespace ewgeom

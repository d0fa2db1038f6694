#include "ewgeom/cxmulti.hpp"

#include <Eigen/Dense>
#include <sstream>

namespace ewgeom {

IndexKind conj_kind(IndexKind k) {
  switch (k) {
    case IndexKind::vec:
      return IndexKind::conj;
    case IndexKind::conj:
      return IndexKind::vec;
    case IndexKind::dual:
      return IndexKind::conjdual;
    case IndexKind::conjdual:
      return IndexKind::dual;
  }
  throw ShapeMismatch("unreachable index kind");
}

bool contractible(IndexKind a, IndexKind b) {
  return (a == IndexKind::vec && b == IndexKind::dual) ||
         (a == IndexKind::dual && b == IndexKind::vec) ||
         (a == IndexKind::conj && b == IndexKind::conjdual) ||
         (a == IndexKind::conjdual && b == IndexKind::conj);
}

const char* kind_name(IndexKind k) {
  switch (k) {
    case IndexKind::vec:
      return "vec";
    case IndexKind::dual:
      return "dual";
    case IndexKind::conj:
      return "conj";
    case IndexKind::conjdual:
      return "conjdual";
  }
  return "?";
}

CxMatrix to_cx_matrix(const ExactMatrix& m) {
  CxMatrix out(m.extent());
  for (int i = 0; i < m.extent(); ++i)
    for (int j = 0; j < m.extent(); ++j) out.at(i, j) = m.at(i, j).to_complex();
  return out;
}

// ---------------------------------- signature --------------------------------

namespace {

// sign of a real Q(sqrt2) scalar; throws NotRepresentable on imaginary parts
int coeff_sign(const ExactComplex& x) { return sign_real(x); }

}  // namespace

Signature signature(const ExactMatrix& h) {
  if (!h.is_hermitian()) throw NotHermitian("signature needs a Hermitian matrix");
  const int n = h.extent();
  const std::vector<ExactComplex> c = h.char_poly();

  // All roots are real, so Descartes' rule gives the positive-root count
  // exactly, and the zero-root multiplicity is the number of trailing zero
  // coefficients of det(tI - h).
  Signature s;
  int last_nonzero = n;
  while (last_nonzero > 0 && c[static_cast<std::size_t>(last_nonzero)].is_zero()) --last_nonzero;
  s.zero = n - last_nonzero;

  int prev = 0;
  for (int k = 0; k <= last_nonzero; ++k) {
    const ExactComplex& ck = c[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    const int sg = coeff_sign(ck);
    if (prev != 0 && sg != prev) ++s.plus;
    prev = sg;
  }
  s.minus = n - s.zero - s.plus;
  return s;
}

Signature signature(const CxMatrix& h) {
  const int n = h.extent();
  const double scale = std::max(h.max_abs(), 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = h.at(i, j);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw NotHermitian("signature needs a Hermitian matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const double thr = 1e-10 * h.max_abs();
  Signature s;
  for (int i = 0; i < n; ++i) {
    const double lam = solver.eigenvalues()(i);
    if (std::abs(lam) <= thr)
      ++s.zero;
    else if (lam > 0)
      ++s.plus;
    else
      ++s.minus;
  }
  return s;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.plus << "," << s.minus << "," << s.zero << ")";
  return os.str();
}

}  // namespace ewgeom

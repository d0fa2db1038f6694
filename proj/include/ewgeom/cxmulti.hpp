#pragma once
// Complex multilinear core.
//
// Tensors carry one of four index kinds per slot -- vector, dual, conjugated
// vector, conjugated dual -- and contraction is only legal between vec/dual
// and between conj/conjdual.  The dagger acts on "square" rank-2 tensors whose
// second slot is the conjugate-mirror of the first ((u (x) vbar)^+ = v (x) ubar),
// which at the component level is the conjugate transpose.
//
// Two numeric backends: ExactComplex (field Q(i,sqrt2), identities checked
// with ==) and std::complex<double>.  They are distinct template instances, so
// mixing backends in one expression is a compile error rather than a coercion.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace ewgeom {

using Cx = std::complex<double>;

// ----------------------------- field adapters --------------------------------

inline ExactComplex field_conj(const ExactComplex& x) { return x.conj(); }
inline Cx field_conj(const Cx& x) { return std::conj(x); }
inline bool field_is_zero(const ExactComplex& x) { return x.is_zero(); }
inline bool field_is_zero(const Cx& x) { return x == Cx(0.0, 0.0); }
inline double field_abs(const ExactComplex& x) { return std::abs(x.to_complex()); }
inline double field_abs(const Cx& x) { return std::abs(x); }
inline ExactComplex field_inverse(const ExactComplex& x) { return x.inverse(); }
inline Cx field_inverse(const Cx& x) {
  if (x == Cx(0.0, 0.0)) throw NonInvertible("division by zero");
  return 1.0 / x;
}
inline Cx to_cx(const ExactComplex& x) { return x.to_complex(); }
inline Cx to_cx(const Cx& x) { return x; }

// ================================ SquareMatrix ===============================

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, T(0)) {
    if (n < 1 || n > 8) throw ShapeMismatch("matrix extent must be in 1..8");
  }
  SquareMatrix(int n, std::initializer_list<T> entries) : SquareMatrix(n) {
    if (static_cast<int>(entries.size()) != n * n)
      throw ShapeMismatch("entry count does not match extent");
    std::size_t k = 0;
    for (const T& v : entries) data_[k++] = v;
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int extent() const { return n_; }
  T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }
  friend SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = -a.data_[k];
    return out;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T aik = a.at(i, k);
        if (field_is_zero(aik)) continue;
        for (int j = 0; j < a.n_; ++j) out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    return out;
  }
  friend SquareMatrix operator*(const T& s, const SquareMatrix& a) {
    SquareMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
    return out;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

  T trace() const {
    T s(0);
    for (int i = 0; i < n_; ++i) s = s + at(i, i);
    return s;
  }

  SquareMatrix conjugate() const {
    SquareMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = field_conj(at(i, j));
    return out;
  }
  SquareMatrix transpose() const {
    SquareMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = at(j, i);
    return out;
  }
  SquareMatrix dagger() const { return conjugate().transpose(); }

  bool is_hermitian() const { return *this == dagger(); }
  bool is_zero() const {
    for (const T& v : data_)
      if (!field_is_zero(v)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const T& v : data_) m = std::max(m, field_abs(v));
    return m;
  }

  // Gauss-Jordan inverse over the field; NonInvertible on singular input.
  SquareMatrix inverse() const;
  // determinant by row elimination over the field
  T det() const;
  // monic characteristic polynomial coefficients c[0..n] of det(tI - A),
  // c[0] = 1, computed by the trace recursion
  std::vector<T> char_poly() const;

 private:
  void check_same(const SquareMatrix& b) const {
    if (n_ != b.n_) throw ShapeMismatch("matrix extents disagree");
  }
  int n_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = SquareMatrix<ExactComplex>;
using CxMatrix = SquareMatrix<Cx>;

CxMatrix to_cx_matrix(const ExactMatrix& m);

// commutator, defined here because half the library lives on it
template <typename T>
SquareMatrix<T> commutator(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  return a * b - b * a;
}

// ================================ MixedTensor ================================

enum class IndexKind : std::uint8_t { vec, dual, conj, conjdual };

// the conjugate-mirror kind (what the second slot of a daggerable pair must be)
IndexKind conj_kind(IndexKind k);
// kinds that may be contracted against each other
bool contractible(IndexKind a, IndexKind b);
const char* kind_name(IndexKind k);

struct IndexSlot {
  IndexKind kind;
  int size;
  friend bool operator==(const IndexSlot& a, const IndexSlot& b) {
    return a.kind == b.kind && a.size == b.size;
  }
};

// Dense tensor of rank 0..4; rank 0 holds a single scalar (result of a full
// contraction).
template <typename T>
class MixedTensor {
 public:
  MixedTensor() : data_(1, T(0)) {}
  explicit MixedTensor(std::vector<IndexSlot> slots) : slots_(std::move(slots)) {
    if (slots_.size() > 4) throw ShapeMismatch("tensor rank must be at most 4");
    std::size_t total = 1;
    for (const IndexSlot& s : slots_) {
      if (s.size < 1 || s.size > 8) throw ShapeMismatch("index extent must be in 1..8");
      total *= static_cast<std::size_t>(s.size);
    }
    data_.assign(total, T(0));
  }

  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<IndexSlot>& slots() const { return slots_; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  T& at(std::initializer_list<int> idx) { return data_[offset(idx)]; }
  const T& at(std::initializer_list<int> idx) const { return data_[offset(idx)]; }
  const T& scalar() const {
    if (rank() != 0) throw ShapeMismatch("not a scalar tensor");
    return data_[0];
  }

  friend MixedTensor operator+(const MixedTensor& a, const MixedTensor& b) {
    if (!(a.slots_ == b.slots_)) throw ShapeMismatch("tensor slots disagree");
    MixedTensor out(a.slots_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend MixedTensor operator*(const T& s, const MixedTensor& a) {
    MixedTensor out(a.slots_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
    return out;
  }
  friend bool operator==(const MixedTensor& a, const MixedTensor& b) {
    return a.slots_ == b.slots_ && a.data_ == b.data_;
  }

  // complex conjugation: vec <-> conj, dual <-> conjdual, entries conjugated
  MixedTensor conjugated() const {
    std::vector<IndexSlot> slots = slots_;
    for (IndexSlot& s : slots) s.kind = conj_kind(s.kind);
    MixedTensor out(slots);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_conj(data_[k]);
    return out;
  }

  // contraction of slots i and j (vec vs dual / conj vs conjdual)
  MixedTensor contract(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
      throw ShapeMismatch("bad contraction slots");
    if (i > j) std::swap(i, j);
    const IndexSlot si = slots_[static_cast<std::size_t>(i)];
    const IndexSlot sj = slots_[static_cast<std::size_t>(j)];
    if (!contractible(si.kind, sj.kind))
      throw IllegalContraction(std::string(kind_name(si.kind)) + " against " +
                               kind_name(sj.kind));
    if (si.size != sj.size) throw ShapeMismatch("contracted extents disagree");
    std::vector<IndexSlot> out_slots;
    std::vector<int> free_pos;
    for (int k = 0; k < rank(); ++k)
      if (k != i && k != j) {
        out_slots.push_back(slots_[static_cast<std::size_t>(k)]);
        free_pos.push_back(k);
      }
    MixedTensor out(out_slots);
    std::vector<int> cur(free_pos.size(), 0);
    std::vector<int> full(static_cast<std::size_t>(rank()), 0);
    for (std::size_t off = 0; off < out.data_.size(); ++off) {
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        full[static_cast<std::size_t>(free_pos[k])] = cur[k];
      T s(0);
      for (int d = 0; d < si.size; ++d) {
        full[static_cast<std::size_t>(i)] = d;
        full[static_cast<std::size_t>(j)] = d;
        s = s + data_[flat(full)];
      }
      out.data_[off] = s;
      for (int k = static_cast<int>(cur.size()) - 1; k >= 0; --k) {
        if (++cur[static_cast<std::size_t>(k)] < out_slots[static_cast<std::size_t>(k)].size)
          break;
        cur[static_cast<std::size_t>(k)] = 0;
      }
    }
    return out;
  }

  // outer product (rank sum must stay <= 4)
  friend MixedTensor outer(const MixedTensor& a, const MixedTensor& b) {
    std::vector<IndexSlot> slots = a.slots_;
    slots.insert(slots.end(), b.slots_.begin(), b.slots_.end());
    MixedTensor out(slots);
    for (std::size_t p = 0; p < a.data_.size(); ++p)
      for (std::size_t q = 0; q < b.data_.size(); ++q)
        out.data_[p * b.data_.size() + q] = a.data_[p] * b.data_[q];
    return out;
  }

 private:
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t off = 0;
    for (int k = 0; k < rank(); ++k)
      off = off * static_cast<std::size_t>(slots_[static_cast<std::size_t>(k)].size) +
            static_cast<std::size_t>(idx[static_cast<std::size_t>(k)]);
    return off;
  }
  std::size_t offset(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw ShapeMismatch("index rank mismatch");
    std::size_t off = 0;
    int k = 0;
    for (int v : idx) {
      const IndexSlot& s = slots_[static_cast<std::size_t>(k++)];
      if (v < 0 || v >= s.size) throw ShapeMismatch("index out of range");
      off = off * static_cast<std::size_t>(s.size) + static_cast<std::size_t>(v);
    }
    return off;
  }
  std::vector<IndexSlot> slots_;
  std::vector<T> data_;
};

// rank-2 square tensor <-> matrix views
template <typename T>
MixedTensor<T> tensor_from_matrix(const SquareMatrix<T>& m, IndexKind k1, IndexKind k2) {
  MixedTensor<T> t({{k1, m.extent()}, {k2, m.extent()}});
  for (int i = 0; i < m.extent(); ++i)
    for (int j = 0; j < m.extent(); ++j) t.at({i, j}) = m.at(i, j);
  return t;
}

template <typename T>
SquareMatrix<T> matrix_from_tensor(const MixedTensor<T>& t) {
  if (t.rank() != 2 || t.slots()[0].size != t.slots()[1].size)
    throw ShapeMismatch("need a square rank-2 tensor");
  SquareMatrix<T> m(t.slots()[0].size);
  for (int i = 0; i < m.extent(); ++i)
    for (int j = 0; j < m.extent(); ++j) m.at(i, j) = t.at({i, j});
  return m;
}

// dagger on a square rank-2 tensor whose slot kinds are conjugate mirrors:
// (u (x) vbar)^+ = v (x) ubar  =>  entries conjugate-transposed, slots kept
template <typename T>
MixedTensor<T> dagger(const MixedTensor<T>& t) {
  if (t.rank() != 2 || t.slots()[1].kind != conj_kind(t.slots()[0].kind))
    throw SignatureError("dagger needs slots (K, conj-mirror of K)");
  if (t.slots()[0].size != t.slots()[1].size)
    throw ShapeMismatch("dagger slots must have equal extent");
  MixedTensor<T> out(t.slots());
  const int n = t.slots()[0].size;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at({i, j}) = field_conj(t.at({j, i}));
  return out;
}

// w = H + A with H Hermitian and A anti-Hermitian under the dagger above
template <typename T>
std::pair<MixedTensor<T>, MixedTensor<T>> hermitian_split(const MixedTensor<T>& t) {
  const MixedTensor<T> d = dagger(t);
  const T half = field_inverse(T(2));
  return {half * (t + d), half * (t + (T(-1) * d))};
}

// =================================== metric ==================================

// <Xbar, Y> for operators X, Y and a nondegenerate Hermitian metric h:
// contract conj(X) against Y with one lowered and one raised copy of h.
// Equals  tr(h^-1 X^+ h Y);  for h-anti-Hermitian X this is -tr(X Y).
template <typename T>
T h_contract(const SquareMatrix<T>& x, const SquareMatrix<T>& y, const SquareMatrix<T>& h) {
  if (!h.is_hermitian()) throw NotHermitian("metric must be Hermitian");
  SquareMatrix<T> hinv;
  try {
    hinv = h.inverse();
  } catch (const NonInvertible&) {
    throw DegenerateMetric("metric has a null direction");
  }
  return (hinv * x.dagger() * h * y).trace();
}

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
  }
};

// Exact eigenvalue-sign count: characteristic polynomial (all roots real for a
// Hermitian matrix) + Descartes' rule of signs, which is exact in that case.
Signature signature(const ExactMatrix& h);
// Float backend: Hermitian eigensolve; |lambda| < 1e-10 * max|entry| counts as 0.
Signature signature(const CxMatrix& h);

std::string to_string(const Signature& s);

// ------------------------- template implementations --------------------------

template <typename T>
SquareMatrix<T> SquareMatrix<T>::inverse() const {
  const int n = n_;
  SquareMatrix<T> a = *this;
  SquareMatrix<T> inv = SquareMatrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = col; r < n; ++r) {
      const double mag = field_abs(a.at(r, col));
      if (!field_is_zero(a.at(r, col)) && (pivot < 0 || mag > best)) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot < 0) throw NonInvertible("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const T scale = field_inverse(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = scale * a.at(col, j);
      inv.at(col, j) = scale * inv.at(col, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || field_is_zero(a.at(r, col))) continue;
      const T f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

template <typename T>
T SquareMatrix<T>::det() const {
  const int n = n_;
  SquareMatrix<T> a = *this;
  T d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = col; r < n; ++r) {
      const double mag = field_abs(a.at(r, col));
      if (!field_is_zero(a.at(r, col)) && (pivot < 0 || mag > best)) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot < 0) return T(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      d = T(-1) * d;
    }
    d = d * a.at(col, col);
    const T scale = field_inverse(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (field_is_zero(a.at(r, col))) continue;
      const T f = scale * a.at(r, col);
      for (int j = col; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
    }
  }
  return d;
}

template <typename T>
std::vector<T> SquareMatrix<T>::char_poly() const {
  // N_1 = A;  c_k = -tr(N_k)/k;  N_{k+1} = A (N_k + c_k I)
  const int n = n_;
  std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
  c[0] = T(1);
  SquareMatrix<T> nk = *this;
  for (int k = 1; k <= n; ++k) {
    const T ck = T(-1) * field_inverse(T(k)) * nk.trace();
    c[static_cast<std::size_t>(k)] = ck;
    if (k < n) nk = (*this) * (nk + ck * SquareMatrix<T>::identity(n));
  }
  return c;
}

}  // namespace ewgeom

#pragma once
// Sparse multivariate polynomials over the exact scalar field.  Component
// functions of geometric objects are polynomials so that derivatives, and
// hence all bracket identities, are exactly computable.

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace ewgeom {

class Poly {
 public:
  using Exponents = std::vector<int>;  // one entry per variable, >= 0
  using TermMap = std::map<Exponents, ExactComplex>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const ExactComplex& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // value of a constant polynomial (zero polynomial included)
  ExactComplex constant_value() const;
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const ExactComplex& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const ExactComplex& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly partial(int var) const;
  ExactComplex eval(const std::vector<ExactComplex>& point) const;
  // replace variable v by replacement[v]; the replacements fix the new arity
  Poly substitute(const std::vector<Poly>& replacement) const;
  Poly conjugated() const;

  int degree_in(int var) const;
  // largest total degree over the variable range [first, last)
  int degree_in_range(int first, int last) const;
  // true when every monomial has total degree d over [first, last)
  bool homogeneous_in_range(int first, int last, int d) const;
  // polynomial multiplying var^power, with that variable's exponent removed
  Poly coefficient_of(int var, int power) const;
  // append fresh trailing variables (exponent 0 everywhere)
  Poly widened(int new_nvars) const;

 private:
  void check_same(const Poly& b) const {
    if (nvars_ != b.nvars_) throw ChartMismatch("polynomial variable counts disagree");
  }
  int nvars_ = 0;
  TermMap terms_;
};

// literal syntax: terms joined by +/-, factors separated by spaces or '*';
// a factor is a variable with optional ^power, or an exact scalar (rational,
// i, sqrt2, or a parenthesized combination)
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);
std::string format_poly(const Poly& p, const std::vector<std::string>& names);

// ================================ PolyMatrix =================================
// Square matrices over the polynomial ring (no division; inverses only via
// adjugate and constant determinants).

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int n, int nvars);

  int extent() const { return n_; }
  int nvars() const { return nvars_; }
  Poly& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const Poly& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  static PolyMatrix identity(int n, int nvars);

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& s, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
  }

  PolyMatrix partial(int var) const;
  Poly trace() const;
  Poly det() const;        // cofactor expansion (n <= 8)
  PolyMatrix adjugate() const;
  bool is_zero() const;

 private:
  void check_same(const PolyMatrix& b) const {
    if (n_ != b.n_ || nvars_ != b.nvars_) throw ShapeMismatch("polynomial matrices disagree");
  }
  int n_ = 0;
  int nvars_ = 0;
  std::vector<Poly> data_;
};

}  // namespace ewgeom

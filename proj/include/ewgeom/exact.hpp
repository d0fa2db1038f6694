#pragma once
// Exact scalar tower used by the algebraic core:
//
//   Rational        -- arbitrary-precision rational (boost cpp_rational)
//   GaussianRational-- a + b*i with rational a, b
//   ExactComplex    -- x + y*sqrt(2) with Gaussian-rational x, y
//
// ExactComplex is a field: Q(i, sqrt2).  It is closed under every operation
// the spinor algebra needs (Pauli normalizations 1/sqrt2, basis changes with
// 1/sqrt2 entries, epsilon phases), so identities can be asserted with ==.

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ewgeom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// sign of a rational: -1, 0, +1
inline int sgn(const Rational& q) { return q.sign(); }

Rational parse_rational(const std::string& text);  // "p", "-p/q"
std::string format_rational(const Rational& q);    // canonical "p" / "p/q"

// ============================== GaussianRational =============================

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}        // NOLINT(implicit)
  GaussianRational(int r) : re(r) {}                        // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational inverse() const {
    if (is_zero()) throw NonInvertible("division by zero Gaussian rational");
    const Rational n = norm2();
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// static unit i
inline GaussianRational gauss_i() { return {Rational(0), Rational(1)}; }

// ================================ ExactComplex ===============================

struct ExactComplex {
  GaussianRational a;  // rational-in-i part
  GaussianRational b;  // coefficient of sqrt(2)

  ExactComplex() = default;
  ExactComplex(GaussianRational x) : a(std::move(x)) {}     // NOLINT(implicit)
  ExactComplex(Rational x) : a(std::move(x)) {}             // NOLINT(implicit)
  ExactComplex(int x) : a(x) {}                             // NOLINT(implicit)
  ExactComplex(GaussianRational x, GaussianRational y) : a(std::move(x)), b(std::move(y)) {}

  static ExactComplex i() { return {gauss_i(), GaussianRational{}}; }
  static ExactComplex sqrt2() { return {GaussianRational{}, GaussianRational(1)}; }
  // 1/sqrt2 = sqrt2/2
  static ExactComplex inv_sqrt2() { return {GaussianRational{}, GaussianRational(Rational(1, 2))}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_real() const { return a.is_real() && b.is_real(); }
  bool is_rational() const { return b.is_zero() && a.is_real(); }

  ExactComplex conj() const { return {a.conj(), b.conj()}; }

  friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend ExactComplex operator-(const ExactComplex& x) { return {-x.a, -x.b}; }
  friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) s,  s = sqrt2
    return {x.a * y.a + GaussianRational(2) * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  ExactComplex inverse() const {
    if (is_zero()) throw NonInvertible("division by zero exact scalar");
    // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2); the denominator is Gaussian
    // rational and nonzero because sqrt2 is irrational over Q(i).
    const GaussianRational den = a * a - GaussianRational(2) * (b * b);
    const GaussianRational inv = den.inverse();
    return {a * inv, -(b * inv)};
  }
  friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
    return x * y.inverse();
  }
  ExactComplex& operator+=(const ExactComplex& y) { return *this = *this + y; }
  ExactComplex& operator-=(const ExactComplex& y) { return *this = *this - y; }
  ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }

  friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

  // real part as an element of Q(sqrt2): (a.re, b.re)
  // imag part likewise (a.im, b.im)
  std::complex<double> to_complex() const {
    const double s = 1.4142135623730950488016887242097;
    return {to_double(a.re) + s * to_double(b.re), to_double(a.im) + s * to_double(b.im)};
  }
};

// Exact sign of a real element r + q*sqrt2 of Q(sqrt2).
// r^2 == 2 q^2 forces r == q == 0 by irrationality, so the comparison below is
// decisive whenever the value is nonzero.
int sign_q2(const Rational& r, const Rational& q);

// sign of a real ExactComplex; throws NotRepresentable if the value is not real
int sign_real(const ExactComplex& x);

// Exact square root of a nonnegative rational within Q(sqrt2), when it exists:
// q = s^2 or q = 2 s^2 with s rational.  Throws NotRepresentable otherwise.
ExactComplex sqrt_rational_q2(const Rational& q);

// canonical literal, e.g. "3/2", "-1+1/2*sqrt2", "i", "1-i", "1/2*i*sqrt2"
std::string format_exact(const ExactComplex& x);
ExactComplex parse_exact(const std::string& text);

}  // namespace ewgeom

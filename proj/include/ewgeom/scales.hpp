#pragma once
// Unit-space bookkeeping.  A physical quantity carries an exact rational
// exponent triple (d_T, d_L, d_M) over the time/length/mass unit lines; the
// exponents form a commutative monoid under tensor product (addition).
//
// Natural units fix c and hbar, which trades T -> L and M -> L^-1; what
// remains of a dimension is the single rational L-power  d_L + d_T - d_M.

#include <string>

#include "errors.hpp"
#include "exact.hpp"

namespace ewgeom {

// ================================ ScaleDim ===================================

struct ScaleDim {
  Rational t{0};  // time exponent
  Rational l{0};  // length exponent
  Rational m{0};  // mass exponent

  bool is_dimensionless() const { return t == 0 && l == 0 && m == 0; }

  friend bool operator==(const ScaleDim& a, const ScaleDim& b) {
    return a.t == b.t && a.l == b.l && a.m == b.m;
  }
  friend bool operator!=(const ScaleDim& a, const ScaleDim& b) { return !(a == b); }
};

// tensor product of unit spaces = componentwise exponent sum
inline ScaleDim dim_combine(const ScaleDim& a, const ScaleDim& b) {
  return {a.t + b.t, a.l + b.l, a.m + b.m};
}

// r-th tensor power; r = -1 is the dual space, r = 1/m an exact m-th root
inline ScaleDim dim_power(const ScaleDim& a, const Rational& r) {
  return {a.t * r, a.l * r, a.m * r};
}

// L-power after fixing c (T -> L) and hbar (M -> L^-1)
inline Rational to_natural_units(const ScaleDim& a) { return a.l + a.t - a.m; }

// "T^-1 L^3/2 M^1/2" with zero-exponent factors omitted; dimensionless is "1"
std::string print_dim(const ScaleDim& d);
ScaleDim parse_dim(const std::string& text);

// ============================ coupling constants =============================
// Dimensions of the couplings that appear in the field equations.

inline ScaleDim dim_time() { return {1, 0, 0}; }
inline ScaleDim dim_length() { return {0, 1, 0}; }
inline ScaleDim dim_mass() { return {0, 0, 1}; }
inline ScaleDim dim_dimensionless() { return {}; }

inline ScaleDim dim_c() { return {-1, 1, 0}; }                          // speed
inline ScaleDim dim_hbar() { return {-1, 2, 1}; }                       // action
inline ScaleDim dim_G() { return {-2, 3, -1}; }                         // gravity
inline ScaleDim dim_e() { return {-1, Rational(3, 2), Rational(1, 2)}; }// charge (Gaussian style)

struct CouplingEntry {
  const char* name;
  ScaleDim dim;
};

// canonical table: c, hbar, G, e, m
const CouplingEntry* coupling_constants(std::size_t* count);

// ================================ ScaledReal =================================
// A real value tagged with its dimension.  Multiplication combines dimensions;
// addition insists on equal ones.

struct ScaledReal {
  double value{0.0};
  ScaleDim dim{};

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    return {a.value * b.value, dim_combine(a.dim, b.dim)};
  }
  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.dim != b.dim)
      throw DimensionMismatch("cannot add " + print_dim(a.dim) + " to " + print_dim(b.dim));
    return {a.value + b.value, a.dim};
  }
  friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) {
    if (a.dim != b.dim)
      throw DimensionMismatch("cannot subtract " + print_dim(b.dim) + " from " + print_dim(a.dim));
    return {a.value - b.value, a.dim};
  }
  friend ScaledReal operator*(double s, const ScaledReal& a) { return {s * a.value, a.dim}; }
};

}  // namespace ewgeom

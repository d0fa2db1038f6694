#include "ewgeom/exact.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ewgeom {

namespace {

// floor-sqrt with perfect-square test
bool exact_sqrt(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  *root = r;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { throw ParseError("bad rational literal '" + text + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) bad();
  std::string num = (negative ? "-" : "") + text.substr(digits_begin, pos - digits_begin);
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') bad();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) bad();
    den = text.substr(den_begin);
  }
  BigInt d(den);
  if (d == 0) bad();
  return Rational(BigInt(num), d);
}

std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  std::string out = num.str();
  if (den != 1) out += "/" + den.str();
  return out;
}

int sign_q2(const Rational& r, const Rational& q) {
  if (q == 0) return sgn(r);
  if (r == 0) return sgn(q);
  if (sgn(r) == sgn(q)) return sgn(r);
  // opposite signs: |r| vs |q|*sqrt2 decides; equality would force r=q=0
  return (r * r > 2 * q * q) ? sgn(r) : sgn(q);
}

int sign_real(const ExactComplex& x) {
  if (x.a.im != 0 || x.b.im != 0) throw NotRepresentable("sign of a non-real value");
  return sign_q2(x.a.re, x.b.re);
}

ExactComplex sqrt_rational_q2(const Rational& q) {
  if (q < 0) throw NotRepresentable("square root of a negative rational");
  if (q == 0) return ExactComplex(0);
  const auto try_sqrt = [](const Rational& v, Rational* out) {
    BigInt rn, rd;
    if (!exact_sqrt(boost::multiprecision::numerator(v), &rn)) return false;
    if (!exact_sqrt(boost::multiprecision::denominator(v), &rd)) return false;
    *out = Rational(rn, rd);
    return true;
  };
  Rational s;
  if (try_sqrt(q, &s)) return ExactComplex(s);
  if (try_sqrt(q / 2, &s))  // q = 2 s^2  =>  sqrt(q) = s*sqrt2
    return ExactComplex(GaussianRational{}, GaussianRational(s));
  throw NotRepresentable("sqrt(" + format_rational(q) + ") is outside Q(sqrt2)");
}

// ------------------------------ formatting ----------------------------------

namespace {

// one additive term: coeff * (i?) * (sqrt2?)
struct Term {
  Rational coeff;
  bool has_i = false;
  bool has_s = false;
};

std::string format_term(const Term& t, bool leading) {
  std::string out;
  const Rational mag = (t.coeff < 0) ? Rational(-t.coeff) : t.coeff;
  if (t.coeff < 0)
    out += "-";
  else if (!leading)
    out += "+";
  const bool unit = (mag == 1) && (t.has_i || t.has_s);
  if (!unit) out += format_rational(mag);
  if (t.has_i) out += (unit && out.size() <= 1 ? "i" : (!unit ? "*i" : "i"));
  if (t.has_s) out += (t.has_i || !unit) ? "*sqrt2" : "sqrt2";
  return out;
}

}  // namespace

std::string format_exact(const ExactComplex& x) {
  std::vector<Term> terms;
  if (x.a.re != 0) terms.push_back({x.a.re, false, false});
  if (x.a.im != 0) terms.push_back({x.a.im, true, false});
  if (x.b.re != 0) terms.push_back({x.b.re, false, true});
  if (x.b.im != 0) terms.push_back({x.b.im, true, true});
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) out += format_term(terms[k], k == 0);
  return out;
}

ExactComplex parse_exact(const std::string& text) {
  const auto bad = [&] { throw ParseError("bad exact literal '" + text + "'"); };
  if (text.empty()) bad();
  ExactComplex total;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = +1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = (text[pos] == '-') ? -1 : +1;
      ++pos;
    } else if (pos != 0) {
      bad();
    }
    // factors separated by '*': rational / "i" / "sqrt2"
    Rational coeff(1);
    bool saw_coeff = false, has_i = false, has_s = false;
    bool expect_factor = true;
    while (expect_factor) {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != '*' && text[pos] != '+' && text[pos] != '-') ++pos;
      std::string tok = text.substr(start, pos - start);
      if (tok == "i" && !has_i) {
        has_i = true;
      } else if (tok == "sqrt2" && !has_s) {
        has_s = true;
      } else if (!tok.empty() && !saw_coeff && !has_i && !has_s &&
                 std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coeff = parse_rational(tok);
        saw_coeff = true;
      } else {
        bad();
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    if (sign < 0) coeff = -coeff;
    GaussianRational g = has_i ? GaussianRational(Rational(0), coeff) : GaussianRational(coeff);
    total = total + (has_s ? ExactComplex(GaussianRational{}, g) : ExactComplex(g));
  }
  return total;
}

}  // namespace ewgeom

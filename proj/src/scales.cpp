#include "ewgeom/scales.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace ewgeom {

namespace {

void print_factor(std::string* out, const char* sym, const Rational& e) {
  if (e == 0) return;
  if (!out->empty()) *out += ' ';
  *out += sym;
  if (e != 1) {
    *out += '^';
    *out += format_rational(e);
  }
}

}  // namespace

std::string print_dim(const ScaleDim& d) {
  std::string out;
  print_factor(&out, "T", d.t);
  print_factor(&out, "L", d.l);
  print_factor(&out, "M", d.m);
  return out.empty() ? "1" : out;
}

ScaleDim parse_dim(const std::string& text) {
  if (text == "1") return {};
  ScaleDim d;
  bool seen_t = false, seen_l = false, seen_m = false;
  std::istringstream in(text);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok.empty()) throw ParseError("bad dimension literal '" + text + "'");
    const char sym = tok[0];
    Rational e(1);
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2)
        throw ParseError("bad dimension factor '" + tok + "'");
      e = parse_rational(tok.substr(2));
    }
    switch (sym) {
      case 'T':
        if (seen_t) throw ParseError("duplicate T factor in '" + text + "'");
        seen_t = true;
        d.t = e;
        break;
      case 'L':
        if (seen_l) throw ParseError("duplicate L factor in '" + text + "'");
        seen_l = true;
        d.l = e;
        break;
      case 'M':
        if (seen_m) throw ParseError("duplicate M factor in '" + text + "'");
        seen_m = true;
        d.m = e;
        break;
      default:
        throw ParseError("unknown unit symbol in '" + tok + "'");
    }
  }
  if (!any) throw ParseError("empty dimension literal");
  return d;
}

const CouplingEntry* coupling_constants(std::size_t* count) {
  static const std::array<CouplingEntry, 5> table{{
      {"c", dim_c()},
      {"hbar", dim_hbar()},
      {"G", dim_G()},
      {"e", dim_e()},
      {"m", dim_mass()},
  }};
  *count = table.size();
  return table.data();
}

}  // namespace ewgeom

#include "ewgeom/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ewgeom {

// ================================== Poly =====================================

Poly Poly::constant(int nvars, const ExactComplex& c) {
  Poly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw ShapeMismatch("variable index out of range");
  Poly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, ExactComplex(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

ExactComplex Poly::constant_value() const {
  if (!is_constant()) throw NotRepresentable("polynomial is not constant");
  return terms_.empty() ? ExactComplex(0) : terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const ExactComplex& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ChartMismatch("exponent arity mismatch");
  for (int k : e)
    if (k < 0) throw ShapeMismatch("negative exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const ExactComplex& s, const Poly& a) {
  Poly out(a.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
  return out;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw ShapeMismatch("variable index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents de = e;
    de[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(de, ExactComplex(k) * c);
  }
  return out;
}

ExactComplex Poly::eval(const std::vector<ExactComplex>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ChartMismatch("evaluation arity mismatch");
  ExactComplex total(0);
  for (const auto& [e, c] : terms_) {
    ExactComplex term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = term * point[v];
    total = total + term;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& replacement) const {
  if (static_cast<int>(replacement.size()) != nvars_)
    throw ChartMismatch("substitution arity mismatch");
  const int out_vars = replacement.empty() ? 0 : replacement[0].nvars();
  for (const Poly& r : replacement)
    if (r.nvars() != out_vars) throw ChartMismatch("substitution targets disagree");
  Poly out(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = term * replacement[v];
    out = out + term;
  }
  return out;
}

Poly Poly::conjugated() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

int Poly::degree_in_range(int first, int last) const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int v = first; v < last; ++v) total += e[static_cast<std::size_t>(v)];
    d = std::max(d, total);
  }
  return d;
}

bool Poly::homogeneous_in_range(int first, int last, int d) const {
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int v = first; v < last; ++v) total += e[static_cast<std::size_t>(v)];
    if (total != d) return false;
  }
  return true;
}

Poly Poly::coefficient_of(int var, int power) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] != power) continue;
    Exponents reduced = e;
    reduced[static_cast<std::size_t>(var)] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

Poly Poly::widened(int new_nvars) const {
  if (new_nvars < nvars_) throw ShapeMismatch("cannot shrink variable count");
  Poly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents we = e;
    we.resize(static_cast<std::size_t>(new_nvars), 0);
    out.terms_.emplace(we, c);
  }
  return out;
}

// ------------------------------ literal syntax -------------------------------

namespace {

struct PolyParser {
  const std::string& text;
  const std::vector<std::string>& names;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("bad polynomial literal near position " + std::to_string(pos) + ": " + what);
  }

  int find_variable(const std::string& word) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == word) return static_cast<int>(k);
    return -1;
  }

  // factor := '(' exact ')' | identifier('^'int)? | rational
  // returns the factor as a polynomial
  Poly factor() {
    skip_ws();
    const int nvars = static_cast<int>(names.size());
    if (pos >= text.size()) fail("expected a factor");
    if (text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      const ExactComplex c = parse_exact(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      return Poly::constant(nvars, c);
    }
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      const std::string word = text.substr(pos, end - pos);
      const int var = find_variable(word);
      if (var < 0) {
        // not a chart variable: accept the exact-scalar keywords
        if (word == "i" || word == "sqrt2") {
          pos = end;
          return Poly::constant(nvars, parse_exact(word));
        }
        fail("unknown name '" + word + "'");
      }
      pos = end;
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t dend = pos;
        while (dend < text.size() && std::isdigit(static_cast<unsigned char>(text[dend]))) ++dend;
        if (dend == pos) fail("missing exponent");
        power = std::stoi(text.substr(pos, dend - pos));
        pos = dend;
      }
      Poly out = Poly::constant(nvars, ExactComplex(1));
      for (int k = 0; k < power; ++k) out = out * Poly::variable(nvars, var);
      return out;
    }
    // rational number
    std::size_t end = pos;
    while (end < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
      ++end;
    if (end == pos) fail("expected a factor");
    const Rational q = parse_rational(text.substr(pos, end - pos));
    pos = end;
    return Poly::constant(nvars, ExactComplex(q));
  }

  // term := factor (('*'|' ') factor)*
  Poly term() {
    Poly out = factor();
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == '+' || text[pos] == '-') break;
      if (text[pos] == '*') ++pos;
      out = out * factor();
    }
    return out;
  }

  Poly parse() {
    const int nvars = static_cast<int>(names.size());
    Poly out(nvars);
    bool negate = false;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negate = text[pos] == '-';
      ++pos;
    }
    if (eof()) fail("empty literal");
    while (true) {
      const Poly t = term();
      out = negate ? out - t : out + t;
      if (eof()) break;
      if (text[pos] == '+')
        negate = false;
      else if (text[pos] == '-')
        negate = true;
      else
        fail("expected + or -");
      ++pos;
    }
    return out;
  }
};

// true when the printed scalar needs parentheses inside a product
bool needs_parens(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos;
}

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
  PolyParser parser{text, names};
  return parser.parse();
}

std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.nvars())
    throw ChartMismatch("name list does not match variable count");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = format_exact(c);
    bool negated = false;
    if (!needs_parens(coeff) && !coeff.empty() && coeff[0] == '-') {
      negated = true;
      coeff = coeff.substr(1);
    }
    os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
    first = false;

    std::vector<std::string> factors;
    const bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (coeff != "1" || all_zero)
      factors.push_back(needs_parens(coeff) ? "(" + coeff + ")" : coeff);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      std::string f = names[v];
      if (e[v] > 1) f += "^" + std::to_string(e[v]);
      factors.push_back(f);
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << " ";
      os << factors[k];
    }
  }
  return os.str();
}

// ================================ PolyMatrix =================================

PolyMatrix::PolyMatrix(int n, int nvars) : n_(n), nvars_(nvars) {
  if (n < 1 || n > 8) throw ShapeMismatch("matrix extent must be in 1..8");
  data_.assign(static_cast<std::size_t>(n) * n, Poly(nvars));
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nvars, ExactComplex(1));
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.n_, a.nvars_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.n_, a.nvars_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.n_, a.nvars_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j)
        out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return out;
}

PolyMatrix operator*(const Poly& s, const PolyMatrix& a) {
  PolyMatrix out(a.n_, a.nvars_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
  return out;
}

PolyMatrix PolyMatrix::partial(int var) const {
  PolyMatrix out(n_, nvars_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].partial(var);
  return out;
}

Poly PolyMatrix::trace() const {
  Poly s(nvars_);
  for (int i = 0; i < n_; ++i) s = s + at(i, i);
  return s;
}

namespace {

Poly det_minor(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  Poly s(m.nvars());
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(rows[0], cols[j]).is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Poly cof = m.at(rows[0], cols[j]) * det_minor(m, sub_rows, sub_cols);
    s = (j % 2 == 0) ? s + cof : s - cof;
  }
  return s;
}

}  // namespace

Poly PolyMatrix::det() const {
  std::vector<int> idx(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) idx[static_cast<std::size_t>(k)] = k;
  return det_minor(*this, idx, idx);
}

PolyMatrix PolyMatrix::adjugate() const {
  PolyMatrix out(n_, nvars_);
  if (n_ == 1) {
    out.at(0, 0) = Poly::constant(nvars_, ExactComplex(1));
    return out;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n_; ++k) {
        if (k != j) rows.push_back(k);  // delete row j, column i for the cofactor
        if (k != i) cols.push_back(k);
      }
      const Poly minor = det_minor(*this, rows, cols);
      out.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace ewgeom

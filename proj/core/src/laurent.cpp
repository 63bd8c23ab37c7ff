#include "lift/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lift {

Laurent Laurent::constant(std::size_t dim, const Int& c) {
  Laurent f(dim);
  f.add_term(ExpVec(dim, 0), c);
  return f;
}

Laurent Laurent::monomial(const ExpVec& e, const Int& c) {
  Laurent f(e.size());
  f.add_term(e, c);
  return f;
}

Int Laurent::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Laurent::constant_term() const { return coefficient(ExpVec(dim_, 0)); }

void Laurent::add_term(const ExpVec& e, const Int& c) {
  if (e.size() != dim_) throw error("exponent length does not match dimension");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& g) const {
  if (dim_ != g.dim_) throw error("dimension mismatch in +");
  Laurent h = *this;
  for (const auto& [e, c] : g.terms_) h.add_term(e, c);
  return h;
}

Laurent Laurent::operator-(const Laurent& g) const {
  if (dim_ != g.dim_) throw error("dimension mismatch in -");
  Laurent h = *this;
  for (const auto& [e, c] : g.terms_) h.add_term(e, -c);
  return h;
}

Laurent Laurent::operator-() const {
  Laurent h(dim_);
  for (const auto& [e, c] : terms_) h.terms_.emplace(e, -c);
  return h;
}

Laurent Laurent::operator*(const Laurent& g) const {
  if (dim_ != g.dim_) throw error("dimension mismatch in *");
  Laurent h(dim_);
  ExpVec e(dim_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : g.terms_) {
      for (std::size_t i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
      h.add_term(e, c1 * c2);
    }
  return h;
}

Laurent Laurent::operator*(const Int& c) const {
  Laurent h(dim_);
  if (c == 0) return h;
  for (const auto& [e, k] : terms_) h.terms_.emplace(e, k * c);
  return h;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent acc = Laurent::constant(dim_, 1);
  Laurent base = *this;
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

Laurent Laurent::drop_constant() const {
  Laurent h = *this;
  h.terms_.erase(ExpVec(dim_, 0));
  return h;
}

std::vector<ExpVec> Laurent::support() const {
  std::vector<ExpVec> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Laurent mul(const Laurent& f, const Laurent& g) { return f * g; }
Int constant_term(const Laurent& f) { return f.constant_term(); }

Laurent monomial_change(const Laurent& f, const IntMat& u, const ExpVec& shift) {
  if (u.rows() != f.dimension() || u.cols() != f.dimension())
    throw error("monomial_change: matrix shape mismatch");
  if (shift.size() != f.dimension()) throw error("monomial_change: shift length mismatch");
  if (!is_unimodular(u)) throw error("monomial_change: matrix is not unimodular");
  Laurent h(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    ExpVec img(f.dimension());
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Int s = shift[i];
      for (std::size_t j = 0; j < u.cols(); ++j) s += u.at(i, j) * Int(e[j]);
      img[i] = static_cast<std::int64_t>(s);
    }
    h.add_term(img, c);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parser.
//
//   input   := [ 'vars' ':' var (',' var)* ';' ] expr
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)* ('/' divisor)?
//   factor  := (integer | var | '(' expr ')') ('^' sint)?
//   divisor := monomial | '(' monomial ')'
//   monomial:= var ('^' sint)? ('*' var ('^' sint)?)*
//
// Whitespace is insignificant. Division is by monomials only; negative
// powers are allowed on single-term bases with coefficient +-1.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  std::vector<std::string> vars;
  bool vars_fixed = false;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  }

  Int parse_signed_int() {
    skip_ws();
    bool neg = eat('-');
    Int v = parse_int();
    return neg ? -v : v;
  }

  std::string parse_var_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected variable name");
    ++pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }

  std::size_t var_index(const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it != vars.end()) return static_cast<std::size_t>(it - vars.begin());
    if (vars_fixed) fail("variable '" + name + "' not in declared vars list");
    vars.push_back(name);
    return vars.size() - 1;
  }

  // Exponent maps use a growable map keyed by variable index until the
  // final dimension is known.
  struct Poly {
    std::map<std::map<std::size_t, std::int64_t>, Int> terms;

    static Poly constant(const Int& c) {
      Poly p;
      if (c != 0) p.terms[{}] = c;
      return p;
    }
    void add(const std::map<std::size_t, std::int64_t>& e, const Int& c) {
      if (c == 0) return;
      auto [it, fresh] = terms.emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
      }
    }
    Poly operator+(const Poly& o) const {
      Poly r = *this;
      for (auto& [e, c] : o.terms) r.add(e, c);
      return r;
    }
    Poly operator*(const Poly& o) const {
      Poly r;
      for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) {
          auto e = e1;
          for (auto& [k, v] : e2) {
            e[k] += v;
            if (e[k] == 0) e.erase(k);
          }
          r.add(e, c1 * c2);
        }
      return r;
    }
    Poly negate() const {
      Poly r;
      for (auto& [e, c] : terms) r.terms.emplace(e, -c);
      return r;
    }
  };

  Poly pow_poly(const Poly& base, const Int& n, std::size_t at) {
    if (n < 0) {
      if (base.terms.size() != 1) throw parse_error("negative power of a non-monomial", at);
      auto& [e, c] = *base.terms.begin();
      if (c != 1 && c != -1)
        throw parse_error("negative power of a monomial with coefficient != +-1", at);
      std::map<std::size_t, std::int64_t> inv;
      for (auto& [k, v] : e) inv[k] = -v;
      Poly unit;
      unit.terms[inv] = c;  // |c| = 1 so c^{-1} = c
      return pow_poly(unit, -n, at);
    }
    Poly acc = Poly::constant(1);
    Poly b = base;
    Int m = n;
    while (m > 0) {
      if ((m & 1) != 0) acc = acc * b;
      b = b * b;
      m >>= 1;
    }
    return acc;
  }

  Poly parse_factor() {
    skip_ws();
    std::size_t at = pos;
    Poly base;
    char c = peek();
    if (c == '(') {
      eat('(');
      base = parse_expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly::constant(parse_int());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t idx = var_index(parse_var_name());
      base.terms[{{idx, 1}}] = 1;
    } else {
      fail("expected integer, variable or '('");
    }
    if (eat('^')) base = pow_poly(base, parse_signed_int(), at);
    return base;
  }

  Poly parse_monomial() {
    Poly m = Poly::constant(1);
    for (;;) {
      std::size_t at = pos;
      std::size_t idx = var_index(parse_var_name());
      Poly v;
      v.terms[{{idx, 1}}] = 1;
      if (eat('^')) v = pow_poly(v, parse_signed_int(), at);
      m = m * v;
      if (!eat('*')) break;
    }
    return m;
  }

  Poly parse_divisor() {
    if (eat('(')) {
      Poly m = parse_monomial();
      if (!eat(')')) fail("expected ')' after monomial divisor");
      return m;
    }
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("division is allowed by monomials only");
    return parse_monomial();
  }

  Poly parse_term() {
    Poly t = parse_factor();
    while (eat('*')) t = t * parse_factor();
    if (eat('/')) {
      std::size_t at = pos;
      Poly d = parse_divisor();
      t = t * pow_poly(d, Int(-1), at);
    }
    return t;
  }

  Poly parse_expr() {
    bool neg = false;
    skip_ws();
    if (peek() == '+')
      eat('+');
    else if (peek() == '-') {
      eat('-');
      neg = true;
    }
    Poly acc = parse_term();
    if (neg) acc = acc.negate();
    for (;;) {
      char c = peek();
      if (c == '+') {
        eat('+');
        acc = acc + parse_term();
      } else if (c == '-') {
        eat('-');
        acc = acc + parse_term().negate();
      } else {
        break;
      }
    }
    return acc;
  }

  ParsedPoly run() {
    skip_ws();
    if (text.compare(pos, 5, "vars:") == 0) {
      pos += 5;
      for (;;) {
        vars.push_back(parse_var_name());
        if (!eat(',')) break;
      }
      if (!eat(';')) fail("expected ';' after vars header");
      vars_fixed = true;
      for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
          if (vars[i] == vars[j]) fail("duplicate variable in vars header");
    }
    Poly p = parse_expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");

    Laurent f(vars.size());
    for (auto& [e, c] : p.terms) {
      ExpVec exp(vars.size(), 0);
      for (auto& [k, v] : e) exp[k] = v;
      f.add_term(exp, c);
    }
    return ParsedPoly{std::move(f), std::move(vars)};
  }
};

}  // namespace

ParsedPoly parse_poly(const std::string& text) { return Parser(text).run(); }

Laurent parse(const std::string& text) { return parse_poly(text).poly; }

std::vector<std::string> default_var_names(std::size_t dim) {
  static const char* xyzw[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back(i < 4 ? xyzw[i] : "x" + std::to_string(i + 1));
  return names;
}

std::string format(const Laurent& f, std::vector<std::string> vars) {
  if (vars.empty()) vars = default_var_names(f.dimension());
  if (vars.size() != f.dimension()) throw error("format: variable list length mismatch");
  std::ostringstream os;
  os << "vars: ";
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
  os << "; ";
  if (f.is_zero()) {
    os << "0";
    return os.str();
  }
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    std::vector<std::string> num, den;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string part = vars[i];
      auto k = e[i] > 0 ? e[i] : -e[i];
      if (k != 1) part += "^" + std::to_string(k);
      (e[i] > 0 ? num : den).push_back(part);
    }
    std::string head;
    if (a != 1 || num.empty())
      head = a.str();
    for (const auto& p : num) {
      if (!head.empty()) head += "*";
      head += p;
    }
    os << head;
    if (!den.empty()) {
      os << "/";
      if (den.size() > 1) os << "(";
      for (std::size_t i = 0; i < den.size(); ++i) os << (i ? "*" : "") << den[i];
      if (den.size() > 1) os << ")";
    }
  }
  return os.str();
}

std::string to_exponent_records(const Laurent& f) {
  std::ostringstream os;
  for (const auto& [e, c] : f.terms()) {
    os << c;
    for (auto x : e) os << " " << x;
    os << "\n";
  }
  return os.str();
}

Laurent from_exponent_records(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<ExpVec, Int>> rows;
  std::size_t dim = 0;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string ctok;
    if (!(ls >> ctok)) continue;  // blank line
    Int c;
    try {
      c = Int(ctok);
    } catch (const std::exception&) {
      throw error("bad coefficient on record line " + std::to_string(lineno));
    }
    ExpVec e;
    std::int64_t x;
    while (ls >> x) e.push_back(x);
    if (!ls.eof()) throw error("bad exponent on record line " + std::to_string(lineno));
    if (rows.empty())
      dim = e.size();
    else if (e.size() != dim)
      throw error("inconsistent exponent length on record line " + std::to_string(lineno));
    rows.emplace_back(std::move(e), std::move(c));
  }
  Laurent f(dim);
  for (auto& [e, c] : rows) f.add_term(e, c);
  return f;
}

}  // namespace lift

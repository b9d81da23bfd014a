#include "rrca/exact/parse.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "rrca/error.hpp"

namespace rrca {

namespace {

// Polynomial with rational coefficients and integer exponents in named variables.
struct Raw {
  std::map<std::vector<int>, Rat> terms;

  static Raw constant(const Rat& c, int nvars) {
    Raw r;
    if (!c.is_zero()) r.terms[std::vector<int>(nvars, 0)] = c;
    return r;
  }
  void add(const std::vector<int>& e, const Rat& c) {
    if (c.is_zero()) return;
    Rat& slot = terms[e];
    slot += c;
    if (slot.is_zero()) terms.erase(e);
  }
  bool is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (int e : terms.begin()->first)
      if (e != 0) return false;
    return true;
  }
  Rat constant_value() const { return terms.empty() ? Rat(0) : terms.begin()->second; }
};

Raw mul(const Raw& a, const Raw& b) {
  Raw r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> names, std::vector<bool> negative_ok)
      : s_(text), names_(std::move(names)), negative_ok_(std::move(negative_ok)) {}

  Raw parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Raw r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected token '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  int nvars() const { return static_cast<int>(names_.size()); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Raw expr() {
    Raw acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    add_into(acc, term(), neg);
    while (true) {
      if (accept('+')) add_into(acc, term(), false);
      else if (accept('-')) add_into(acc, term(), true);
      else break;
    }
    return acc;
  }

  static void add_into(Raw& acc, const Raw& t, bool neg) {
    for (const auto& [e, c] : t.terms) acc.add(e, neg ? -c : c);
  }

  Raw term() {
    Raw acc = factor();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else {
        skip();
        std::size_t at = pos_;
        if (!accept('/')) break;
        Raw d = factor();
        if (!d.is_constant()) throw ParseError("division by a non-constant expression", at);
        if (d.constant_value().is_zero()) throw ParseError("division by zero", at);
        acc = mul(acc, Raw::constant(d.constant_value().inverse(), nvars()));
      }
    }
    return acc;
  }

  Raw factor() {
    skip();
    std::size_t at = pos_;
    int var = -1;
    Raw base = atom(var);
    if (!accept('^')) return base;
    skip();
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (e > 100000) throw ParseError("exponent too large", start);
    if (neg) {
      if (var >= 0 && negative_ok_[var]) {
        std::vector<int> ex(nvars(), 0);
        ex[var] = -static_cast<int>(e);
        Raw r;
        r.add(ex, Rat(1));
        return r;
      }
      if (base.is_constant() && !base.constant_value().is_zero())
        return Raw::constant(pow(base.constant_value(), -e), nvars());
      throw ParseError("negative exponent not allowed here", at);
    }
    Raw r = Raw::constant(Rat(1), nvars());
    for (long i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Raw atom(int& var) {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Raw r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Raw::constant(Rat(mpz_class(std::string(s_.substr(start, pos_ - start)))), nvars());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) {
          var = i;
          std::vector<int> ex(nvars(), 0);
          ex[i] = 1;
          Raw r;
          r.add(ex, Rat(1));
          return r;
        }
      throw ParseError("unknown symbol '" + name + "'", start);
    }
    throw ParseError("unexpected token '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::vector<bool> negative_ok_;
};

}  // namespace

Rat parse_rational_expr(std::string_view text) {
  Raw r = Parser(text, {}, {}).parse();
  return r.constant_value();
}

Cyc parse_cyclotomic(std::string_view text, int conductor) {
  Raw r = Parser(text, {"z"}, {true}).parse();
  std::vector<Rat> c(conductor, Rat(0));
  for (const auto& [e, v] : r.terms) c[((e[0] % conductor) + conductor) % conductor] += v;
  return Cyc::from_coeffs(conductor, c);
}

LaurentQ parse_laurent(std::string_view text) {
  Raw r = Parser(text, {"q"}, {true}).parse();
  LaurentQ l;
  for (const auto& [e, v] : r.terms) l.add(e[0], v);
  return l;
}

ParamPoly parse_param_poly(std::string_view text, const VarNames& vars, int conductor) {
  std::vector<std::string> names = vars ? *vars : std::vector<std::string>{};
  for (const auto& n : names)
    if (n == "z") throw MathError("parameter symbol clashes with z");
  names.push_back("z");
  std::vector<bool> neg(names.size(), false);
  neg.back() = true;
  Raw r = Parser(text, names, neg).parse();
  int nv = static_cast<int>(names.size()) - 1;
  ParamPoly::Poly p;
  for (const auto& [e, v] : r.terms) {
    Monomial m;
    for (int i = 0; i < nv; ++i) m.set(i, e[i]);
    Cyc coef = conductor > 1 ? Cyc::zeta(conductor, e[nv]) * Cyc(v) : Cyc(v);
    if (conductor <= 1 && e[nv] != 0) throw MathError("z used without a cyclotomic conductor");
    p.add_term(m, coef);
  }
  return ParamPoly(vars, p);
}

}  // namespace rrca

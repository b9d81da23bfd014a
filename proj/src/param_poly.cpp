#include "rrca/exact/param_poly.hpp"

#include <ostream>
#include <sstream>

#include "rrca/error.hpp"
#include "rrca/exact/parse.hpp"

namespace rrca {

VarNames make_var_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) > kMaxVars) throw MathError("too many parameter symbols");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

namespace {

bool same_vars(const VarNames& a, const VarNames& b) { return a == b || (a && b && *a == *b); }

}  // namespace

ParamPoly ParamPoly::variable(const VarNames& vars, int index) {
  if (!vars || index < 0 || index >= static_cast<int>(vars->size())) throw MathError("unknown parameter index");
  return ParamPoly(vars, Poly::term(Cyc(1), Monomial::variable(index)));
}

ParamPoly ParamPoly::variable(const VarNames& vars, std::string_view name) {
  if (vars)
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == name) return variable(vars, static_cast<int>(i));
  throw MathError("unknown parameter symbol '" + std::string(name) + "'");
}

ParamPoly ParamPoly::parse(std::string_view text, const VarNames& vars, int conductor) {
  return parse_param_poly(text, vars, conductor);
}

void ParamPoly::adopt(const ParamPoly& o) {
  if (!o.vars_) return;
  if (!vars_) {
    vars_ = o.vars_;
    return;
  }
  if (!same_vars(vars_, o.vars_)) throw MathError("parameter symbol sets differ");
}

Cyc ParamPoly::constant_value() const {
  if (!is_constant()) throw MathError("polynomial is not constant: " + str());
  return p_.constant_term();
}

Cyc ParamPoly::evaluate(const std::vector<Cyc>& values) const {
  Cyc acc(0);
  for (const auto& [m, c] : p_.terms()) {
    Cyc t = c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (i >= static_cast<int>(values.size())) throw MathError("missing parameter value");
      t *= pow(values[i], m[i]);
    }
    acc += t;
  }
  return acc;
}

ParamPoly ParamPoly::substitute(const std::vector<ParamPoly>& images) const {
  ParamPoly acc;
  for (const auto& [m, c] : p_.terms()) {
    ParamPoly t(c);
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (i >= static_cast<int>(images.size())) throw MathError("missing substitution image");
      for (int e = 0; e < m[i]; ++e) t *= images[i];
    }
    acc += t;
  }
  return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  adopt(o);
  p_ += o.p_;
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  adopt(o);
  p_ -= o.p_;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  adopt(o);
  if (o.is_constant()) {
    p_ = p_.scaled(o.p_.constant_term());
  } else if (is_constant()) {
    p_ = o.p_.scaled(p_.constant_term());
  } else {
    p_ = p_ * o.p_;
  }
  return *this;
}

ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw MathError("division by zero");
  ParamPoly r = a;
  r.adopt(b);
  if (b.is_constant()) return ParamPoly(r.vars_, a.p_.scaled(b.p_.constant_term().inverse()));
  return ParamPoly(r.vars_, exact_quotient(a.p_, b.p_));
}

ParamPoly operator/(const ParamPoly& a, const ParamPoly& b) { return exact_divide(a, b); }

ParamPoly inverse(const ParamPoly& p) {
  if (!p.is_constant() || p.is_zero()) throw MathError("parameter polynomial is not invertible: " + p.str());
  return ParamPoly(p.constant_value().inverse());
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) throw MathError("parameter symbol sets differ");
  return a.p_ == b.p_;
}

std::string ParamPoly::str() const {
  if (p_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p_.terms().rbegin(); it != p_.terms().rend(); ++it) {
    const Monomial& m = it->first;
    const Cyc& c = it->second;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_ ? (*vars_)[i] : ("v" + std::to_string(i + 1));
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rat r = c.rational_value();
      negative = r.sign() < 0;
      Rat mag = r.abs();
      if (mono.empty() || !mag.is_one()) coef = mag.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coef;
    if (!coef.empty() && !mono.empty()) os << '*';
    os << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace rrca

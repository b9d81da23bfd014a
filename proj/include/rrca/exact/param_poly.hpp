#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rrca/exact/cyclotomic.hpp"
#include "rrca/exact/sparse_poly.hpp"

namespace rrca {

using VarNames = std::shared_ptr<const std::vector<std::string>>;

VarNames make_var_names(std::vector<std::string> names);

// Polynomial in parameter symbols with cyclotomic coefficients, graded-lex order.
// A ParamPoly without a variable set is a constant and combines with any other.
class ParamPoly {
 public:
  using Poly = SparsePoly<Cyc, GrLexOrder>;

  ParamPoly() = default;
  ParamPoly(int c) : p_(Cyc(c)) {}
  ParamPoly(const Rat& c) : p_(Cyc(c)) {}
  ParamPoly(const Cyc& c) : p_(c) {}
  ParamPoly(VarNames vars, Poly p) : vars_(std::move(vars)), p_(std::move(p)) {}

  static ParamPoly variable(const VarNames& vars, int index);
  static ParamPoly variable(const VarNames& vars, std::string_view name);
  static ParamPoly parse(std::string_view text, const VarNames& vars, int conductor);

  const VarNames& vars() const { return vars_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_constant() const { return p_.is_constant(); }
  Cyc constant_value() const;
  int degree() const { return p_.degree(); }
  std::size_t term_count() const { return p_.size(); }

  Cyc evaluate(const std::vector<Cyc>& values) const;
  // Replaces each variable by a polynomial (in a possibly different variable set).
  ParamPoly substitute(const std::vector<ParamPoly>& images) const;

  std::string str() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator-(const ParamPoly& a) { return ParamPoly(a.vars_, -a.p_); }
  // Division by a nonzero constant, or exact polynomial division.
  friend ParamPoly operator/(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b);

 private:
  void adopt(const ParamPoly& o);

  VarNames vars_;
  Poly p_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
ParamPoly inverse(const ParamPoly& p);
ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b);

}  // namespace rrca

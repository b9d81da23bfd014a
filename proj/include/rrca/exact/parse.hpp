#pragma once

#include <string_view>

#include "rrca/exact/cyclotomic.hpp"
#include "rrca/exact/laurent.hpp"
#include "rrca/exact/param_poly.hpp"
#include "rrca/exact/rat.hpp"

namespace rrca {

// Expression grammar shared by all scalar types:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      division only by constants
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | name | '(' expr ')'
// The cyclotomic generator is written z, the grading variable q.
Rat parse_rational_expr(std::string_view text);
Cyc parse_cyclotomic(std::string_view text, int conductor);
LaurentQ parse_laurent(std::string_view text);
ParamPoly parse_param_poly(std::string_view text, const VarNames& vars, int conductor);

}  // namespace rrca

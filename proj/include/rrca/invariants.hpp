#pragma once

#include <vector>

#include "rrca/exact/laurent.hpp"
#include "rrca/exact/sparse_poly.hpp"
#include "rrca/groups.hpp"

namespace rrca {

// Polynomials in x_1..x_n (or y_1..y_n) under lex order with x_1 > x_2.
template <class C>
using LexPoly = SparsePoly<C, LexOrder>;

struct GroebnerBasis {
  std::vector<LexPoly<Rat>> generators;
};

// Completes the input to a Groebner basis by adding reduced S-polynomials.
GroebnerBasis buchberger(std::vector<LexPoly<Rat>> input);
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

// Full reduction of every term modulo the basis.
template <class C>
LexPoly<C> normal_form(const LexPoly<C>& f, const GroebnerBasis& gb) {
  LexPoly<C> rem = f, out;
  while (!rem.is_zero()) {
    Monomial lm = rem.leading_monomial();
    C lc = rem.leading_coeff();
    bool reduced = false;
    for (const auto& g : gb.generators) {
      if (!g.leading_monomial().divides(lm)) continue;
      Monomial t = g.leading_monomial().quotient_of(lm);
      C factor = lc * C(inverse(g.leading_coeff()));
      for (const auto& [gm, gc] : g.terms()) rem.add_term(gm * t, -(factor * C(gc)));
      reduced = true;
      break;
    }
    if (!reduced) {
      out.add_term(lm, lc);
      rem.add_term(lm, -lc);
    }
  }
  return out;
}

enum class PolynomialSide { h_star, h };  // C[h] in x's, or C[h*] in y's

std::vector<LexPoly<Rat>> fundamental_invariants(const GroupData& g);
std::vector<int> invariant_degrees(const GroupData& g);

// Substitutes the linear action of group element `element` on the chosen side.
LexPoly<Cyc> act_on_polynomial(const GroupData& g, int element, const LexPoly<Cyc>& f,
                               PolynomialSide side = PolynomialSide::h_star);

struct CoinvariantBasis {
  int nvars = 1;
  GroebnerBasis groebner;
  std::vector<Monomial> monomials;  // sorted by degree, x_1 first within a degree
  std::vector<int> degrees;
  int top_degree = 0;
  std::vector<Mat<Rat>> multiplication;  // one per variable
  std::vector<Mat<Cyc>> action;          // one per group element

  int size() const { return static_cast<int>(monomials.size()); }
  int index_of(const Monomial& m) const;  // -1 if not a basis monomial
  Vec<Cyc> coordinates(const LexPoly<Cyc>& f) const;
};

CoinvariantBasis coinvariant_basis(const GroupData& g, PolynomialSide side = PolynomialSide::h_star);

LaurentQ coinvariant_poincare(const GroupData& g);
// Graded multiplicity of the dual of `irrep` in the coinvariant algebra (Molien series).
LaurentQ fake_degree(const GroupData& g, int irrep);
int trailing_degree(const LaurentQ& l);

}  // namespace rrca

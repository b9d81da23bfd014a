#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrca/exact/param_poly.hpp"

// Symmetric algebra structure of the restricted algebra of C_m in the cyclic
// realization, where w acts on x by zeta^{-1} and L_{r,k} has lowest weight rho_r.
namespace rrca {

// Phi(x^i y^j w^q) = 1 exactly on x^{m-1} y^{m-1}.
int symmetrizing_trace(int m, int i, int j, int q);

// chi_{r,k}(x^i y^j w^q) with the character of L truncated at epsilon; k holds k_1..k_{m-1}.
template <class S>
S cyclic_simple_character(int m, int r, int i, int j, int q, const std::vector<S>& k, int epsilon);

// Generic (semisimple) character as a polynomial in k_1..k_{m-1}.
ParamPoly simple_character_cyclic(int m, int r, int i, int j, int q);
// Character at a specialized point, with epsilon_{r,k} read off the point.
Cyc simple_character_cyclic_at(int m, int r, int i, int j, int q, const std::vector<Cyc>& k);

template <class S>
S cyclic_schur_element(int m, int r, const std::vector<S>& k);

struct SchurTable {
  int m = 0;
  std::vector<ParamPoly> entries;
};
SchurTable schur_elements(int m);

struct CharacterTable {
  int m = 0;
  std::vector<std::string> rows;     // chi_{r,k}
  std::vector<std::string> columns;  // Omega Omega^* w^q
  std::vector<std::vector<ParamPoly>> entries;
};
CharacterTable character_table_cyclic(int m);

struct IdentityReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Phi(b) prod_r S_r = sum_r chi_r(b) prod_{r' != r} S_{r'} for all PBW monomials b.
// Both sides share the factor prod_r S_r / V with V the Vandermonde in k_0..k_{m-1};
// the check runs on the quotient and confirms V S_r^{-1} is a polynomial.
IdentityReport verify_schur_identity_symbolic(int m);
// Same identity with both sides fully expanded.
IdentityReport verify_schur_identity_expanded(int m);
// The identity at random semisimple rational points.
IdentityReport verify_schur_identity_at_points(int m, int count, std::uint64_t seed);
// Generic characters against traces of the generic Verma matrices.
IdentityReport verify_characters_against_verma(int m);

// Rank of the character table at a point.
int character_table_rank(int m, const std::vector<Cyc>& k);

std::vector<Cyc> random_semisimple_cyclic_point(int m, std::uint64_t seed);

}  // namespace rrca

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrca/exact/matrix.hpp"

namespace rrca {

enum class GroupFamily { cyclic, dihedral };

// How the generator of a cyclic group acts on h*. The contract (w.x)(y) = x(w^-1 y)
// gives zeta^-1; paper_cyclic picks the generator that acts on h* by zeta.
enum class DualAction { contract, paper_cyclic };

// r^rotation s^flip; for cyclic groups flip is 0 and rotation is the exponent of w.
struct GroupElement {
  int rotation = 0;
  int flip = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct Irrep {
  std::string label;
  int dim = 1;
  std::vector<Mat<Cyc>> matrices;  // one per group element
};

struct Reflection {
  int element = 0;
  Cyc eigenvalue;   // nontrivial eigenvalue on h
  Vec<Cyc> coroot;  // spans Im(1 - s) on h
  Vec<Cyc> root;    // spans Im(1 - s) on h*
  int parameter_class = 0;
};

struct GroupData {
  GroupFamily family = GroupFamily::cyclic;
  int m = 0;
  DualAction dual_action = DualAction::contract;
  int rank = 1;  // dim h

  std::vector<GroupElement> elements;
  std::vector<Mat<Cyc>> h_matrices;      // columns are images of y_1..y_n
  std::vector<Mat<Cyc>> hstar_matrices;  // columns are images of x_1..x_n
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<Irrep> irreps;
  std::vector<Reflection> reflections;
  int reflection_class_count = 0;
  VarNames parameter_names;
  std::vector<ParamPoly> reflection_parameter;  // c(s) per reflection
  std::vector<int> generators;
  std::vector<std::vector<int>> words;  // each element as a word in generators

  int order() const { return static_cast<int>(elements.size()); }
  int identity() const { return 0; }
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int find(const GroupElement& e) const;
  int irrep_count() const { return static_cast<int>(irreps.size()); }
  int irrep_index(std::string_view label) const;
  int dual_irrep(int irrep) const;
  Cyc character(int irrep, int element) const;
  std::string name() const;

  // Multiplicities of the irreducibles in a class function given by its value per class.
  std::vector<Cyc> decompose(const std::vector<Cyc>& class_values) const;
  // Multiplicity of eta in mu (x) nu.
  Cyc tensor_multiplicity(int mu, int nu, int eta) const;
  Mat<Cyc> character_table() const;  // irreps x classes
};

GroupData build_cyclic(int m, DualAction action = DualAction::contract);
GroupData build_dihedral(int m);

// (y_i, x_j)_s = <coroot, x_j> <y_i, root> / <coroot, root>.
Cyc cherednik_coefficient(const GroupData& g, const Reflection& s, int y_index, int x_index);

// Dihedral parameter order is (a, b) with b = c(s) and a = c(t); odd m has only a.
// Cyclic parameters are k_1..k_{m-1}.
VarNames cyclic_parameter_names(int m);

}  // namespace rrca

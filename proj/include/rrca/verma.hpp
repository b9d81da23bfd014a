#pragma once

#include <string>
#include <vector>

#include "rrca/groups.hpp"
#include "rrca/invariants.hpp"
#include "rrca/parameters.hpp"

namespace rrca {

// Graded W-module class: graded multiplicity of each irreducible.
struct GradedWCharacter {
  std::vector<LaurentQ> mult;

  LaurentQ poincare(const GroupData& g) const;
  int dimension(const GroupData& g) const;
  std::string str(const GroupData& g) const;
  friend bool operator==(const GradedWCharacter&, const GradedWCharacter&) = default;
};

// Baby Verma module over scalar S (Cyc at a specialized point, ParamPoly at the generic one).
// Basis vector index = monomial_index * dim(lambda) + component.
template <class S>
struct VermaModule {
  int irrep = 0;
  int lambda_dim = 1;
  std::vector<int> degree;
  std::vector<Mat<S>> x;  // one per x_i
  std::vector<Mat<S>> y;  // one per y_i
  std::vector<Mat<S>> w;  // one per group element
  std::vector<S> c;       // c(s) per reflection

  int dim() const { return static_cast<int>(degree.size()); }
};

template <class S>
VermaModule<S> build_verma(const GroupData& g, const CoinvariantBasis& cb, int irrep, const std::vector<S>& c);

VermaModule<Cyc> build_verma(const GroupData& g, int irrep, const ParameterPoint& p);
VermaModule<ParamPoly> build_generic_verma(const GroupData& g, int irrep);
std::vector<ParamPoly> generic_reflection_values(const GroupData& g);

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

template <class S>
RelationReport verify_relations(const GroupData& g, const VermaModule<S>& v);

// Scalar by which the Euler element acts on Delta(lambda).
template <class S>
S euler_scalar(const GroupData& g, int irrep, const std::vector<S>& c);

// sum_i x_i y_i + sum_s eps_s/(eps_s - 1) c(s) s as a matrix on the module.
template <class S>
Mat<S> euler_matrix(const GroupData& g, const VermaModule<S>& v);

// Graded W-character of Delta(lambda) from fake degrees and tensor products.
GradedWCharacter verma_graded_character(const GroupData& g, int irrep);

// Decomposes per-degree class functions (degree -> value per class).
GradedWCharacter character_from_traces(const GroupData& g, const std::vector<std::vector<Cyc>>& traces_by_degree);

// Degreewise traces of the group action on a module given by its degrees and matrices.
GradedWCharacter graded_character_of(const GroupData& g, const VermaModule<Cyc>& v);

}  // namespace rrca

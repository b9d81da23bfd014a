#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrca/heads.hpp"
#include "rrca/parameters.hpp"

namespace rrca {

struct FamilyPartition {
  std::vector<std::vector<int>> blocks;  // members sorted, blocks ordered by least member
  std::string provenance;
  std::vector<bool> cuspidal;  // per block, empty when unknown

  int block_of(int irrep) const;
  std::string str(const GroupData& g) const;
};

FamilyPartition euler_families(const GroupData& g, const ParameterPoint& p);
FamilyPartition cm_families(const GroupData& g, const ParameterPoint& p);

// Calogero-Moser data for dihedral groups by parameter stratum.
struct DihedralTableRow {
  std::vector<std::vector<int>> families;
  std::vector<int> rigid;
  std::vector<int> cuspidal;
};
DihedralTableRow dihedral_table_row(const GroupData& g, DihedralRegime regime);

struct RigidityResult {
  bool rigid = false;
  int y_index = -1;  // first failing pair, if any
  int x_index = -1;
  Mat<ParamPoly> residual;
};

// Sum_s c(s) (y_i, x_j)_s lambda(s) = 0 for all i, j.
RigidityResult rigid_test(const GroupData& g, int irrep, const ParameterPoint& p);
// Same with lambda(s) replaced by its trace.
RigidityResult weakly_rigid_test(const GroupData& g, int irrep, const ParameterPoint& p);

// Flags Euler blocks that are good: size 1, size 2 with a supersingular member,
// or size 3 with all members supersingular.
std::vector<bool> good_family_promotion(const GroupData& g, const FamilyPartition& euler);

// Problems found when comparing a CM partition with Euler families and head dimensions.
std::vector<std::string> cross_validate_families(const GroupData& g, const FamilyPartition& cm,
                                                 const FamilyPartition& euler,
                                                 const std::vector<SimpleModuleReport>& simples);

struct DecompositionMatrix {
  Mat<RatFunc> entries;  // rows Delta(lambda), columns L(mu)
  std::optional<LaurentQ> laurent(int row, int col) const;
};

// Solves [Delta(lambda)] = sum_mu D(lambda, mu) [L(mu)] block by block.
DecompositionMatrix solve_graded_decomposition(const GroupData& g, const std::vector<GradedWCharacter>& simple_chars,
                                               const std::vector<GradedWCharacter>& verma_chars,
                                               const FamilyPartition* partition = nullptr);

// Components of the graph linking lambda and mu when [Delta(lambda) : L(mu)] != 0.
FamilyPartition linkage_families(const GroupData& g, const DecompositionMatrix& d);

std::vector<std::string> decomposition_consistency(const GroupData& g, const DecompositionMatrix& d,
                                                   const FamilyPartition& partition);

}  // namespace rrca

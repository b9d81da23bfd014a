#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrca/groups.hpp"

namespace rrca {

// Either the generic point (parameters stay symbolic) or a specialization of every symbol.
struct ParameterPoint {
  bool generic = false;
  std::vector<Cyc> values;  // one per symbol in GroupData::parameter_names

  static ParameterPoint generic_point() { return ParameterPoint{true, {}}; }
};

ParameterPoint zero_point(const GroupData& g);
ParameterPoint make_point(const GroupData& g, const std::vector<Rat>& values);

std::vector<Cyc> reflection_values(const GroupData& g, const ParameterPoint& p);
bool is_zero_point(const GroupData& g, const ParameterPoint& p);

enum class DihedralRegime { zero, generic, a_zero, b_zero, equal, opposite };

DihedralRegime classify_dihedral(const GroupData& g, const ParameterPoint& p);
std::string regime_name(DihedralRegime r);

// Deterministic representative of the generic stratum.
ParameterPoint generic_sample(const GroupData& g);
// Random rational point in the same dihedral stratum as p (or a random semisimple
// cyclic point when p is generic).
ParameterPoint random_point_like(const GroupData& g, const ParameterPoint& p, std::uint64_t seed);

std::string point_str(const GroupData& g, const ParameterPoint& p);

}  // namespace rrca

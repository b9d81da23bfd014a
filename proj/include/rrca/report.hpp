#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrca/parameters.hpp"

namespace rrca {

enum class Computation { group, coinv, verma, simples, families, decomp, schur, chartable, report };

std::string computation_name(Computation c);
Computation parse_computation(const std::string& name);

constexpr std::uint64_t kDefaultSeed = 20240917;

struct JobSpec {
  GroupFamily family = GroupFamily::cyclic;
  int m = 0;
  DualAction dual_action = DualAction::contract;
  bool generic = true;
  std::vector<std::pair<std::string, Rat>> parameters;  // symbol -> value, in symbol order
  std::vector<Computation> computations;
  std::uint64_t seed = kDefaultSeed;
};

// Validates family, range and parameter keys; values are parsed in the rational grammar.
// Unassigned symbols default to 0 once any symbol is given.
JobSpec make_job(GroupFamily family, int m, const std::vector<std::pair<std::string, std::string>>& params,
                 bool force_generic, DualAction action, std::vector<Computation> computations,
                 std::uint64_t seed = kDefaultSeed);

GroupData job_group(const JobSpec& job);
ParameterPoint job_point(const JobSpec& job, const GroupData& g);

// Laurent polynomials as exponent -> coefficient, both as strings.
using LaurentMap = std::map<std::string, std::string>;
LaurentMap laurent_map(const LaurentQ& l);
LaurentQ laurent_from_map(const LaurentMap& m);

struct JobEcho {
  std::string family;
  int m = 0;
  std::string dual_action;
  std::string point;  // "generic", "zero" or an assignment
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> computations;
  std::string seed;
  friend bool operator==(const JobEcho&, const JobEcho&) = default;
};

struct IrrepEntry {
  std::string label;
  int dim = 0;
  friend bool operator==(const IrrepEntry&, const IrrepEntry&) = default;
};

struct GroupSection {
  std::string name;
  int order = 0;
  int rank = 0;
  std::vector<IrrepEntry> irreps;
  int class_count = 0;
  int reflection_count = 0;
  std::vector<std::string> parameter_names;
  std::vector<std::vector<std::string>> character_table;  // rows irreps, columns classes
  friend bool operator==(const GroupSection&, const GroupSection&) = default;
};

struct CoinvSection {
  int basis_size = 0;
  int top_degree = 0;
  std::vector<std::string> invariants;
  LaurentMap poincare;
  std::vector<std::pair<std::string, LaurentMap>> fake_degrees;
  friend bool operator==(const CoinvSection&, const CoinvSection&) = default;
};

struct VermaEntry {
  std::string irrep;
  int dimension = 0;
  std::vector<std::pair<std::string, LaurentMap>> character;
  int relations_checked = 0;
  bool relations_ok = false;
  std::string euler_scalar;
  friend bool operator==(const VermaEntry&, const VermaEntry&) = default;
};

struct SimpleEntry {
  std::string irrep;
  int verma_dimension = 0;
  int dimension = 0;
  int radical_dimension = 0;
  LaurentMap poincare;
  std::vector<std::pair<std::string, LaurentMap>> character;
  bool smooth = false;
  bool rigid = false;
  bool weakly_rigid = false;
  bool supersingular = false;
  friend bool operator==(const SimpleEntry&, const SimpleEntry&) = default;
};

struct SimplesSection {
  std::string evaluated_at;
  std::string collision_point;  // empty unless the job is generic
  bool collision_agrees = true;
  std::vector<SimpleEntry> modules;
  friend bool operator==(const SimplesSection&, const SimplesSection&) = default;
};

struct FamilyEntry {
  std::string kind;  // "euler" or "cm"
  std::string provenance;
  std::vector<std::vector<std::string>> blocks;
  std::vector<bool> cuspidal;
  std::vector<bool> good;
  friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

struct DecompSection {
  std::vector<std::string> labels;
  std::vector<std::vector<LaurentMap>> entries;
  std::vector<std::string> issues;
  friend bool operator==(const DecompSection&, const DecompSection&) = default;
};

struct SchurSection {
  std::vector<std::string> elements;
  friend bool operator==(const SchurSection&, const SchurSection&) = default;
};

struct CharTableSection {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> entries;
  friend bool operator==(const CharTableSection&, const CharTableSection&) = default;
};

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct ReportDocument {
  int schema = 1;
  JobEcho job;
  std::string regime;
  std::optional<GroupSection> group;
  std::optional<CoinvSection> coinv;
  std::vector<VermaEntry> verma;
  std::optional<SimplesSection> simples;
  std::vector<FamilyEntry> families;
  std::vector<std::string> family_issues;
  std::optional<DecompSection> decomposition;
  std::optional<SchurSection> schur;
  std::optional<CharTableSection> chartable;
  std::vector<CheckEntry> checks;
  std::vector<std::string> unverified;

  bool all_checks_passed() const;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument run_job(const JobSpec& job);

std::string to_json_string(const ReportDocument& doc);
ReportDocument from_json_string(const std::string& text);
std::string render_text(const ReportDocument& doc);

}  // namespace rrca

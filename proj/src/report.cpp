#include "rrca/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "rrca/error.hpp"
#include "rrca/exact/parse.hpp"
#include "rrca/families.hpp"
#include "rrca/heads.hpp"
#include "rrca/schur.hpp"

namespace rrca {

namespace {

const std::vector<std::pair<Computation, std::string>>& computation_names() {
  static const std::vector<std::pair<Computation, std::string>> names = {
      {Computation::group, "group"},         {Computation::coinv, "coinv"},   {Computation::verma, "verma"},
      {Computation::simples, "simples"},     {Computation::families, "families"}, {Computation::decomp, "decomp"},
      {Computation::schur, "schur"},         {Computation::chartable, "chartable"}, {Computation::report, "report"}};
  return names;
}

}  // namespace

std::string computation_name(Computation c) {
  for (const auto& [k, v] : computation_names())
    if (k == c) return v;
  return "?";
}

Computation parse_computation(const std::string& name) {
  for (const auto& [k, v] : computation_names())
    if (v == name) return k;
  throw ParseError("unknown computation '" + name + "'", 0);
}

JobSpec make_job(GroupFamily family, int m, const std::vector<std::pair<std::string, std::string>>& params,
                 bool force_generic, DualAction action, std::vector<Computation> computations, std::uint64_t seed) {
  if (family == GroupFamily::cyclic && (m < 2 || m > kMaxVars + 1))
    throw MathError("cyclic order m=" + std::to_string(m) + " outside supported range 2..25");
  if (family == GroupFamily::dihedral && (m < 5 || m > 60))
    throw MathError("dihedral order m=" + std::to_string(m) + " outside supported range 5..60");
  if (family == GroupFamily::dihedral && action == DualAction::paper_cyclic)
    throw MathError("--dual-action paper-cyclic applies to cyclic groups only");
  std::vector<std::string> symbols;
  if (family == GroupFamily::cyclic) {
    for (int i = 1; i < m; ++i) symbols.push_back("k" + std::to_string(i));
  } else {
    symbols = m % 2 ? std::vector<std::string>{"a"} : std::vector<std::string>{"a", "b"};
  }
  JobSpec job;
  job.family = family;
  job.m = m;
  job.dual_action = action;
  job.computations = std::move(computations);
  job.seed = seed;
  std::vector<std::optional<Rat>> values(symbols.size());
  for (const auto& [key, text] : params) {
    auto it = std::find(symbols.begin(), symbols.end(), key);
    if (it == symbols.end()) {
      if (family == GroupFamily::dihedral && key == "b")
        throw MathError("parameter/family mismatch: b is tied to a for odd m");
      throw MathError("parameter/family mismatch: unknown parameter '" + key + "' for " +
                      (family == GroupFamily::cyclic ? "C_" : "I_2(") + std::to_string(m) +
                      (family == GroupFamily::cyclic ? "" : ")"));
    }
    auto& slot = values[it - symbols.begin()];
    if (slot) throw MathError("parameter '" + key + "' given twice");
    slot = parse_rational_expr(text);
  }
  bool any = std::any_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
  if (force_generic && any) throw MathError("--generic conflicts with explicit parameter values");
  job.generic = !any;
  if (any)
    for (std::size_t i = 0; i < symbols.size(); ++i) job.parameters.emplace_back(symbols[i], values[i].value_or(Rat(0)));
  return job;
}

GroupData job_group(const JobSpec& job) {
  return job.family == GroupFamily::cyclic ? build_cyclic(job.m, job.dual_action) : build_dihedral(job.m);
}

ParameterPoint job_point(const JobSpec& job, const GroupData& g) {
  if (job.generic) return ParameterPoint::generic_point();
  std::vector<Rat> v;
  for (const auto& [k, r] : job.parameters) v.push_back(r);
  return make_point(g, v);
}

LaurentMap laurent_map(const LaurentQ& l) {
  LaurentMap out;
  for (const auto& [e, c] : l.terms()) out[std::to_string(e)] = c.str();
  return out;
}

LaurentQ laurent_from_map(const LaurentMap& m) {
  LaurentQ l;
  for (const auto& [e, c] : m) {
    std::size_t used = 0;
    int exp = std::stoi(e, &used);
    if (used != e.size()) throw ParseError("malformed exponent '" + e + "'", 0);
    l.add(exp, Rat::parse(c));
  }
  return l;
}

bool ReportDocument::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

namespace {

bool wants(const JobSpec& job, Computation c) {
  return std::find(job.computations.begin(), job.computations.end(), c) != job.computations.end() ||
         std::find(job.computations.begin(), job.computations.end(), Computation::report) != job.computations.end();
}

std::string lex_str(const LexPoly<Rat>& f, int nvars) {
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Rat& c = it->second;
    std::string mono;
    for (int i = 0; i < nvars; ++i) {
      int e = it->first[i];
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += nvars == 1 ? std::string("x") : "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rat a = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    if (mono.empty()) os << a.str();
    else if (a.is_one()) os << mono;
    else os << a.str() << "*" << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<std::pair<std::string, LaurentMap>> character_entries(const GroupData& g, const GradedWCharacter& ch) {
  std::vector<std::pair<std::string, LaurentMap>> out;
  for (int i = 0; i < g.irrep_count(); ++i)
    if (!ch.mult[i].is_zero()) out.emplace_back(g.irreps[i].label, laurent_map(ch.mult[i]));
  return out;
}

std::vector<std::vector<std::string>> labelled(const GroupData& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : blocks) {
    out.emplace_back();
    for (int i : b) out.back().push_back(g.irreps[i].label);
  }
  return out;
}

void check(ReportDocument& doc, const std::string& name, bool passed, const std::string& detail = "") {
  doc.checks.push_back({name, passed, detail});
}

// Simple heads compared by (dimension, Poincare series, character).
bool same_heads(const std::vector<SimpleModuleReport>& a, const std::vector<SimpleModuleReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].dimension != b[i].dimension || !(a[i].character == b[i].character)) return false;
  return true;
}

std::string regime_of(const GroupData& g, const ParameterPoint& p) {
  if (g.family == GroupFamily::dihedral) return regime_name(classify_dihedral(g, p));
  if (p.generic) return "generic";
  if (is_zero_point(g, p)) return "zero";
  std::vector<Cyc> k = p.values;
  for (int r = 0; r < g.m; ++r)
    if (cyclic_epsilon(g.m, r, k) != g.m) return "non-semisimple";
  return "semisimple";
}

}  // namespace

ReportDocument run_job(const JobSpec& job) {
  GroupData g = job_group(job);
  ParameterPoint p = job_point(job, g);
  ReportDocument doc;
  doc.job.family = job.family == GroupFamily::cyclic ? "cyclic" : "dihedral";
  doc.job.m = job.m;
  doc.job.dual_action = job.dual_action == DualAction::contract ? "contract" : "paper-cyclic";
  doc.job.point = p.generic ? "generic" : (is_zero_point(g, p) ? "zero" : point_str(g, p));
  for (const auto& [k, v] : job.parameters) doc.job.parameters.emplace_back(k, v.str());
  for (auto c : job.computations) doc.job.computations.push_back(computation_name(c));
  doc.job.seed = std::to_string(job.seed);
  doc.regime = regime_of(g, p);

  if (wants(job, Computation::group)) {
    GroupSection s;
    s.name = g.name();
    s.order = g.order();
    s.rank = g.rank;
    for (const auto& ir : g.irreps) s.irreps.push_back({ir.label, ir.dim});
    s.class_count = static_cast<int>(g.classes.size());
    s.reflection_count = static_cast<int>(g.reflections.size());
    s.parameter_names = *g.parameter_names;
    Mat<Cyc> t = g.character_table();
    for (int i = 0; i < t.rows(); ++i) {
      s.character_table.emplace_back();
      for (int j = 0; j < t.cols(); ++j) s.character_table.back().push_back(t(i, j).str());
    }
    doc.group = s;
  }

  if (wants(job, Computation::coinv)) {
    CoinvariantBasis cb = coinvariant_basis(g);
    CoinvSection s;
    s.basis_size = cb.size();
    s.top_degree = cb.top_degree;
    for (const auto& f : fundamental_invariants(g)) s.invariants.push_back(lex_str(f, g.rank));
    s.poincare = laurent_map(coinvariant_poincare(g));
    for (int i = 0; i < g.irrep_count(); ++i) s.fake_degrees.emplace_back(g.irreps[i].label, laurent_map(fake_degree(g, i)));
    check(doc, "coinvariant basis size equals |W|", s.basis_size == g.order());
    check(doc, "coinvariant top degree equals number of reflections",
          s.top_degree == static_cast<int>(g.reflections.size()));
    doc.coinv = s;
  }

  if (wants(job, Computation::verma)) {
    bool all_ok = true, scalar_ok = true;
    for (int i = 0; i < g.irrep_count(); ++i) {
      VermaEntry e;
      e.irrep = g.irreps[i].label;
      e.character = character_entries(g, verma_graded_character(g, i));
      if (p.generic) {
        VermaModule<ParamPoly> v = build_generic_verma(g, i);
        RelationReport r = verify_relations(g, v);
        e.dimension = v.dim();
        e.relations_checked = r.checked;
        e.relations_ok = r.ok();
        ParamPoly eu = euler_scalar<ParamPoly>(g, i, v.c);
        e.euler_scalar = eu.str();
        scalar_ok = scalar_ok && matrices_equal<ParamPoly>(euler_matrix(g, v), Mat<ParamPoly>::Identity(v.dim(), v.dim()) * eu);
      } else {
        VermaModule<Cyc> v = build_verma(g, i, p);
        RelationReport r = verify_relations(g, v);
        e.dimension = v.dim();
        e.relations_checked = r.checked;
        e.relations_ok = r.ok();
        Cyc eu = euler_scalar<Cyc>(g, i, v.c);
        e.euler_scalar = eu.str();
        scalar_ok = scalar_ok && matrices_equal<Cyc>(euler_matrix(g, v), Mat<Cyc>::Identity(v.dim(), v.dim()) * eu);
      }
      all_ok = all_ok && e.relations_ok;
      doc.verma.push_back(e);
    }
    check(doc, "defining relations hold on every baby Verma module", all_ok);
    check(doc, "Euler element acts by its scalar on every baby Verma module", scalar_ok);
  }

  const bool need_simples = wants(job, Computation::simples) || wants(job, Computation::families) ||
                            wants(job, Computation::decomp);
  std::vector<SimpleModuleReport> heads;
  ParameterPoint eval = p;
  if (need_simples) {
    SimplesSection s;
    if (p.generic) {
      eval = generic_sample(g);
      ParameterPoint other = random_point_like(g, p, job.seed);
      heads = all_simple_reports(g, eval);
      s.collision_point = point_str(g, other);
      s.collision_agrees = same_heads(heads, all_simple_reports(g, other));
      check(doc, "generic heads agree at the sample and the random point", s.collision_agrees, s.collision_point);
    } else {
      heads = all_simple_reports(g, p);
    }
    s.evaluated_at = is_zero_point(g, eval) ? "zero" : point_str(g, eval);
    int sum_sq = 0;
    for (const auto& h : heads) {
      SimpleEntry e;
      e.irrep = g.irreps[h.irrep].label;
      e.verma_dimension = h.verma_dim;
      e.dimension = h.dimension;
      e.radical_dimension = static_cast<int>(h.radical_basis.cols());
      e.poincare = laurent_map(h.poincare);
      e.character = character_entries(g, h.character);
      e.smooth = h.smooth;
      e.rigid = rigid_test(g, h.irrep, p).rigid;
      e.weakly_rigid = weakly_rigid_test(g, h.irrep, p).rigid;
      e.supersingular = is_supersingular(g, h.irrep);
      sum_sq += h.dimension * h.dimension;
      s.modules.push_back(e);
    }
    bool rigid_agrees = true;
    for (const auto& e : s.modules) {
      int i = g.irrep_index(e.irrep);
      rigid_agrees = rigid_agrees && (e.rigid == (e.dimension == g.irreps[i].dim));
    }
    check(doc, "rigidity criterion agrees with head dimensions", rigid_agrees);
    check(doc, "no smooth module for a supersingular character",
          std::none_of(s.modules.begin(), s.modules.end(), [](const SimpleEntry& e) { return e.smooth && e.supersingular; }));
    if (g.family == GroupFamily::cyclic && !p.generic) {
      std::vector<int> dims, eps;
      bool labelled_ok = true;
      for (const auto& h : heads) {
        dims.push_back(h.dimension);
        eps.push_back(cyclic_epsilon(g.m, h.irrep, p.values));
        labelled_ok = labelled_ok && dims.back() == eps.back();
      }
      if (job.dual_action == DualAction::paper_cyclic) {
        check(doc, "cyclic head dimensions equal epsilon_{r,k}", labelled_ok);
      } else {
        std::sort(dims.begin(), dims.end());
        std::sort(eps.begin(), eps.end());
        check(doc, "cyclic head dimensions equal the multiset of epsilon_{r,k}", dims == eps);
      }
    }
    if (g.family == GroupFamily::dihedral && g.m % 2 == 1 && classify_dihedral(g, eval) != DihedralRegime::zero) {
      const int m = g.m, order = g.order();
      int rad = order * order * order - sum_sq;
      check(doc, "Jacobson radical dimension 8m^3 - 8m^2 - 2m - 30", rad == 8 * m * m * m - 8 * m * m - 2 * m - 30,
            std::to_string(rad));
    }
    doc.simples = s;
  }

  if (wants(job, Computation::families) || wants(job, Computation::decomp)) {
    FamilyPartition eu = euler_families(g, p);
    FamilyPartition cm = cm_families(g, p);
    std::vector<bool> good = good_family_promotion(g, eu);
    doc.families.push_back({"euler", eu.provenance, labelled(g, eu.blocks), {}, good});
    doc.families.push_back({"cm", cm.provenance, labelled(g, cm.blocks), cm.cuspidal, {}});
    doc.family_issues = cross_validate_families(g, cm, euler_families(g, eval), heads);
    check(doc, "CM families refine Euler families and match smooth heads", doc.family_issues.empty(),
          doc.family_issues.empty() ? "" : doc.family_issues.front());
    if (g.family == GroupFamily::dihedral) {
      DihedralTableRow row = dihedral_table_row(g, classify_dihedral(g, p));
      std::vector<int> rigid;
      for (const auto& e : doc.simples->modules)
        if (e.rigid) rigid.push_back(g.irrep_index(e.irrep));
      check(doc, "rigid set matches the dihedral table row", rigid == row.rigid);
    }
  }

  if (wants(job, Computation::decomp)) {
    FamilyPartition cm = cm_families(g, eval);
    std::vector<GradedWCharacter> sc, vc;
    for (const auto& h : heads) sc.push_back(h.character);
    for (int i = 0; i < g.irrep_count(); ++i) vc.push_back(verma_graded_character(g, i));
    DecompositionMatrix d = solve_graded_decomposition(g, sc, vc, &cm);
    DecompSection s;
    for (const auto& ir : g.irreps) s.labels.push_back(ir.label);
    for (int i = 0; i < g.irrep_count(); ++i) {
      s.entries.emplace_back();
      for (int j = 0; j < g.irrep_count(); ++j) s.entries.back().push_back(laurent_map(*d.laurent(i, j)));
    }
    s.issues = decomposition_consistency(g, d, cm);
    FamilyPartition linked = linkage_families(g, solve_graded_decomposition(g, sc, vc, nullptr));
    check(doc, "linkage classes of the decomposition matrix equal the CM families", linked.blocks == cm.blocks,
          linked.str(g));
    check(doc, "decomposition matrix is block diagonal with rank-one blocks at q = 1", s.issues.empty(),
          s.issues.empty() ? "" : s.issues.front());
    doc.decomposition = s;
    doc.unverified.push_back("graded decomposition matrices are derived by solving, not tabulated in the source");
  }

  if (job.family == GroupFamily::cyclic && wants(job, Computation::schur)) {
    SchurSection s;
    for (const auto& e : schur_elements(job.m).entries) s.elements.push_back(e.str());
    IdentityReport r = job.m <= 6 ? verify_schur_identity_expanded(job.m)
                                  : verify_schur_identity_at_points(job.m, 50, job.seed);
    check(doc, job.m <= 6 ? "Schur identity holds symbolically" : "Schur identity holds at 50 random points", r.ok(),
          std::to_string(r.checked) + " monomials");
    doc.schur = s;
  } else if (job.family == GroupFamily::dihedral && wants(job, Computation::schur)) {
    doc.unverified.push_back("Schur elements are only available for cyclic groups");
  }

  if (job.family == GroupFamily::cyclic && wants(job, Computation::chartable)) {
    CharacterTable t = character_table_cyclic(job.m);
    CharTableSection s{t.rows, t.columns, {}};
    for (const auto& row : t.entries) {
      s.entries.emplace_back();
      for (const auto& e : row) s.entries.back().push_back(e.str());
    }
    int rk = character_table_rank(job.m, random_semisimple_cyclic_point(job.m, job.seed));
    check(doc, "character table has full rank at a random semisimple point", rk == job.m, std::to_string(rk));
    doc.chartable = s;
  } else if (job.family == GroupFamily::dihedral && wants(job, Computation::chartable)) {
    doc.unverified.push_back("the restricted-algebra character table is only available for cyclic groups");
  }

  if (g.family == GroupFamily::dihedral && doc.simples) {
    DihedralRegime r = classify_dihedral(g, p);
    if (g.m % 2 == 0 && r != DihedralRegime::zero && r != DihedralRegime::a_zero && r != DihedralRegime::b_zero)
      doc.unverified.push_back("graded characters of smooth and rigid-complement heads are computed, not listed");
  }
  return doc;
}

// JSON -----------------------------------------------------------------------

using nlohmann::json;

void to_json(json& j, const JobEcho& e) {
  j = json{{"family", e.family}, {"m", e.m}, {"dual_action", e.dual_action}, {"point", e.point},
           {"parameters", e.parameters}, {"computations", e.computations}, {"seed", e.seed}};
}
void from_json(const json& j, JobEcho& e) {
  j.at("family").get_to(e.family);
  j.at("m").get_to(e.m);
  j.at("dual_action").get_to(e.dual_action);
  j.at("point").get_to(e.point);
  j.at("parameters").get_to(e.parameters);
  j.at("computations").get_to(e.computations);
  j.at("seed").get_to(e.seed);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IrrepEntry, label, dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupSection, name, order, rank, irreps, class_count, reflection_count,
                                   parameter_names, character_table)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CoinvSection, basis_size, top_degree, invariants, poincare, fake_degrees)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VermaEntry, irrep, dimension, character, relations_checked, relations_ok,
                                   euler_scalar)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimpleEntry, irrep, verma_dimension, dimension, radical_dimension, poincare,
                                   character, smooth, rigid, weakly_rigid, supersingular)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimplesSection, evaluated_at, collision_point, collision_agrees, modules)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyEntry, kind, provenance, blocks, cuspidal, good)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DecompSection, labels, entries, issues)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SchurSection, elements)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CharTableSection, rows, columns, entries)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckEntry, name, passed, detail)

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void take(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

std::string to_json_string(const ReportDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  j["job"] = doc.job;
  j["regime"] = doc.regime;
  put(j, "group", doc.group);
  put(j, "coinv", doc.coinv);
  if (!doc.verma.empty()) j["verma"] = doc.verma;
  put(j, "simples", doc.simples);
  if (!doc.families.empty()) {
    j["families"] = doc.families;
    j["family_issues"] = doc.family_issues;
  }
  put(j, "decomposition", doc.decomposition);
  put(j, "schur", doc.schur);
  put(j, "chartable", doc.chartable);
  j["checks"] = doc.checks;
  j["unverified"] = doc.unverified;
  return j.dump(2) + "\n";
}

ReportDocument from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), static_cast<int>(e.byte));
  }
  ReportDocument doc;
  try {
    doc.schema = j.at("schema").get<int>();
    if (doc.schema != 1) throw MathError("unsupported schema " + std::to_string(doc.schema));
    j.at("job").get_to(doc.job);
    j.at("regime").get_to(doc.regime);
    take(j, "group", doc.group);
    take(j, "coinv", doc.coinv);
    if (j.contains("verma")) j.at("verma").get_to(doc.verma);
    take(j, "simples", doc.simples);
    if (j.contains("families")) j.at("families").get_to(doc.families);
    if (j.contains("family_issues")) j.at("family_issues").get_to(doc.family_issues);
    take(j, "decomposition", doc.decomposition);
    take(j, "schur", doc.schur);
    take(j, "chartable", doc.chartable);
    j.at("checks").get_to(doc.checks);
    j.at("unverified").get_to(doc.unverified);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report does not match schema 1: ") + e.what(), 0);
  }
  return doc;
}

// Text -----------------------------------------------------------------------

namespace {

std::string laurent_text(const LaurentMap& m) { return laurent_from_map(m).str(); }

std::string character_text(const std::vector<std::pair<std::string, LaurentMap>>& ch) {
  std::string out;
  for (const auto& [label, l] : ch) {
    if (!out.empty()) out += " + ";
    std::string s = laurent_text(l);
    if (s == "1") out += label;
    else if (l.size() == 1) out += s + "*" + label;
    else out += "(" + s + ")*" + label;
  }
  return out.empty() ? "0" : out;
}

std::string blocks_text(const std::vector<std::vector<std::string>>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + b[i];
    out += "}";
  }
  return out;
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << (doc.job.family == "cyclic" ? "C_" + std::to_string(doc.job.m) : "I_2(" + std::to_string(doc.job.m) + ")")
     << "  point: " << doc.job.point << "  regime: " << doc.regime;
  if (doc.job.family == "cyclic") os << "  dual action: " << doc.job.dual_action;
  os << "\n";
  if (doc.group) {
    const auto& g = *doc.group;
    os << "\ngroup " << g.name << ": order " << g.order << ", rank " << g.rank << ", " << g.class_count
       << " classes, " << g.reflection_count << " reflections\n";
    os << "parameters:";
    for (const auto& n : g.parameter_names) os << " " << n;
    os << "\nirreducibles:";
    for (const auto& ir : g.irreps) os << " " << ir.label << "(" << ir.dim << ")";
    os << "\ncharacter table:\n";
    for (std::size_t i = 0; i < g.character_table.size(); ++i) {
      os << "  " << g.irreps[i].label << ":";
      for (const auto& e : g.character_table[i]) os << "  " << e;
      os << "\n";
    }
  }
  if (doc.coinv) {
    const auto& c = *doc.coinv;
    os << "\ncoinvariant algebra: dim " << c.basis_size << ", top degree " << c.top_degree << "\n";
    os << "invariants:";
    for (const auto& f : c.invariants) os << "  " << f;
    os << "\nPoincare series: " << laurent_text(c.poincare) << "\nfake degrees:\n";
    for (const auto& [label, l] : c.fake_degrees) os << "  " << label << ": " << laurent_text(l) << "\n";
  }
  if (!doc.verma.empty()) {
    os << "\nbaby Verma modules:\n";
    for (const auto& v : doc.verma)
      os << "  Delta(" << v.irrep << "): dim " << v.dimension << ", relations " << (v.relations_ok ? "ok" : "FAILED")
         << " (" << v.relations_checked << "), eu = " << v.euler_scalar << "\n    " << character_text(v.character) << "\n";
  }
  if (doc.simples) {
    const auto& s = *doc.simples;
    os << "\nsimple modules (evaluated at " << s.evaluated_at;
    if (!s.collision_point.empty()) os << "; check point " << s.collision_point << (s.collision_agrees ? " agrees" : " DISAGREES");
    os << "):\n";
    for (const auto& e : s.modules) {
      os << "  L(" << e.irrep << "): dim " << e.dimension << "/" << e.verma_dimension;
      if (e.smooth) os << ", smooth";
      if (e.rigid) os << ", rigid";
      else if (e.weakly_rigid) os << ", weakly rigid";
      if (e.supersingular) os << ", supersingular";
      os << "\n    " << character_text(e.character) << "\n";
    }
  }
  for (const auto& f : doc.families) {
    os << "\n" << (f.kind == "cm" ? "Calogero-Moser" : "Euler") << " families (" << f.provenance
       << "): " << blocks_text(f.blocks) << "\n";
    if (!f.cuspidal.empty()) {
      std::vector<std::vector<std::string>> cusp;
      for (std::size_t b = 0; b < f.blocks.size(); ++b)
        if (f.cuspidal[b]) cusp.push_back(f.blocks[b]);
      os << "  cuspidal: " << (cusp.empty() ? "none" : blocks_text(cusp)) << "\n";
    }
  }
  for (const auto& i : doc.family_issues) os << "  issue: " << i << "\n";
  if (doc.decomposition) {
    const auto& d = *doc.decomposition;
    os << "\ngraded decomposition matrix [Delta(row) : L(column)]:\n";
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
      os << "  " << d.labels[i] << ":";
      for (const auto& e : d.entries[i]) os << "  " << laurent_text(e);
      os << "\n";
    }
  }
  if (doc.schur) {
    os << "\nSchur elements:\n";
    for (std::size_t r = 0; r < doc.schur->elements.size(); ++r) os << "  S_" << r << " = " << doc.schur->elements[r] << "\n";
  }
  if (doc.chartable) {
    const auto& t = *doc.chartable;
    os << "\ncharacter table (columns Omega Omega^* w^q, q = 0.." << t.columns.size() - 1 << "):\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << "  " << t.rows[r] << ":";
      for (const auto& e : t.entries[r]) os << "  " << e << " |";
      os << "\n";
    }
  }
  if (!doc.checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& c : doc.checks)
      os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  for (const auto& u : doc.unverified) os << "unverified: " << u << "\n";
  return os.str();
}

}  // namespace rrca

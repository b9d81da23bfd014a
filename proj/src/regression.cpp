#include "rrca/regression.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "rrca/error.hpp"
#include "rrca/exact/parse.hpp"
#include "rrca/families.hpp"
#include "rrca/heads.hpp"
#include "rrca/schur.hpp"

namespace rrca {

bool RegressionResult::passed() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const RegressionCase& c) { return c.passed; });
}

const std::vector<std::string>& regression_suites() {
  static const std::vector<std::string> ids = {"cyclic_m3_table", "cyclic_schur", "dihedral_odd",
                                               "dihedral_even_loci", "c_zero", "rank_one"};
  return ids;
}

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;  // irrep label, Laurent text

GradedWCharacter expected_character(const GroupData& g, const Terms& terms) {
  GradedWCharacter ch;
  ch.mult.assign(g.irrep_count(), LaurentQ());
  for (const auto& [label, text] : terms) ch.mult[g.irrep_index(label)] += parse_laurent(text);
  return ch;
}

std::string phi(int i) { return "phi_" + std::to_string(i); }
std::string qpow(int e) { return e == 0 ? "1" : "q^" + std::to_string(e); }

// Heads listed for even m by stratum, stated with b = c(s), a = c(t) and eps1(s) = 1.
// The printed a = 0 and b = 0 lists appear here exchanged (see the Euler families at
// these loci), with the one-dimensional tail of L(eps_j) in degree m/2.
std::vector<std::pair<std::string, Terms>> expected_even_heads(const GroupData& g, DihedralRegime r) {
  const int m = g.m, h = (m - 2) / 2;
  Terms l_phi1 = {{phi(1), "1 + q^2"}, {"triv", "q"}, {"sgn", "q"}};
  Terms l_phih = {{phi(h), "1 + q^2"}, {"eps1", "q"}, {"eps2", "q"}};
  std::vector<std::pair<std::string, Terms>> out;
  auto one_dim = [&](const std::string& self, const std::string& tail, bool ascending) {
    Terms t = {{self, "1"}, {tail, qpow(m / 2)}};
    for (int i = 1; i <= h; ++i) t.emplace_back(phi(i), qpow(ascending ? i : m / 2 - i));
    return t;
  };
  switch (r) {
    case DihedralRegime::generic:
      out = {{phi(1), l_phi1}, {phi(h), l_phih}};
      break;
    case DihedralRegime::a_zero:
      out = {{phi(1), l_phi1},
             {phi(h), l_phih},
             {"triv", one_dim("triv", "eps2", true)},
             {"sgn", one_dim("sgn", "eps1", true)},
             {"eps1", one_dim("eps1", "sgn", false)},
             {"eps2", one_dim("eps2", "triv", false)}};
      break;
    case DihedralRegime::b_zero:
      out = {{phi(1), l_phi1},
             {phi(h), l_phih},
             {"triv", one_dim("triv", "eps1", true)},
             {"sgn", one_dim("sgn", "eps2", true)},
             {"eps1", one_dim("eps1", "triv", false)},
             {"eps2", one_dim("eps2", "sgn", false)}};
      break;
    case DihedralRegime::equal:
      out = {{phi(1), l_phi1}};
      break;
    case DihedralRegime::opposite:
      out = {{phi(h), l_phih}};
      break;
    case DihedralRegime::zero:
      break;
  }
  return out;
}

std::vector<int> rigid_set(const GroupData& g, const ParameterPoint& p) {
  std::vector<int> out;
  for (int i = 0; i < g.irrep_count(); ++i)
    if (rigid_test(g, i, p).rigid) out.push_back(i);
  return out;
}

std::vector<int> dimension_rigid_set(const GroupData& g, const std::vector<SimpleModuleReport>& heads) {
  std::vector<int> out;
  for (const auto& h : heads)
    if (h.dimension == g.irreps[h.irrep].dim) out.push_back(h.irrep);
  return out;
}

DecompositionMatrix intrinsic_decomposition(const GroupData& g, const std::vector<SimpleModuleReport>& heads) {
  std::vector<GradedWCharacter> sc, vc;
  for (const auto& h : heads) sc.push_back(h.character);
  for (int i = 0; i < g.irrep_count(); ++i) vc.push_back(verma_graded_character(g, i));
  return solve_graded_decomposition(g, sc, vc, nullptr);
}

struct Runner {
  RegressionResult result;
  void add(std::string name, bool ok, std::string detail = "") {
    result.cases.push_back({std::move(name), ok, std::move(detail)});
  }
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
};

void cyclic_m3_table(Runner& run) {
  static const char* expected[3][3] = {
      {"9*k1^2 - 9*k1*k2", "(-9*z - 9)*k1^2 + (9*z + 9)*k1*k2", "9*z*k1^2 - 9*z*k1*k2"},
      {"9*k1*k2", "9*k1*k2", "9*k1*k2"},
      {"-9*k1*k2 + 9*k2^2", "-9*z*k1*k2 + 9*z*k2^2", "(9*z + 9)*k1*k2 + (-9*z - 9)*k2^2"}};
  CharacterTable t = character_table_cyclic(3);
  VarNames vars = cyclic_parameter_names(3);
  for (int r = 0; r < 3; ++r)
    for (int q = 0; q < 3; ++q) {
      ParamPoly want = parse_param_poly(expected[r][q], vars, 3);
      run.add("chi_" + std::to_string(r) + "(Omega Omega^* w^" + std::to_string(q) + ")", t.entries[r][q] == want,
              t.entries[r][q].str());
    }
}

void cyclic_schur(Runner& run, std::uint64_t seed) {
  VarNames vars = cyclic_parameter_names(2);
  SchurTable s2 = schur_elements(2);
  run.add("S_0 for m=2", s2.entries[0] == parse_param_poly("-4*k1", vars, 2), s2.entries[0].str());
  run.add("S_1 for m=2", s2.entries[1] == parse_param_poly("4*k1", vars, 2), s2.entries[1].str());
  for (int m = 2; m <= 6; ++m) {
    IdentityReport r = verify_schur_identity_expanded(m);
    run.add("symbolic Schur identity m=" + std::to_string(m), r.ok(), r.ok() ? "" : r.failures.front());
  }
  for (int m = 7; m <= 10; ++m) {
    IdentityReport r = verify_schur_identity_at_points(m, 50, seed + m);
    run.add("Schur identity at 50 points m=" + std::to_string(m), r.ok(), r.ok() ? "" : r.failures.front());
  }
}

void dihedral_odd(Runner& run, std::uint64_t seed) {
  for (int m : {5, 7}) {
    GroupData g = build_dihedral(m);
    for (const ParameterPoint& p : {make_point(g, {Rat(1)}), random_point_like(g, make_point(g, {Rat(1)}), seed)}) {
      const std::string tag = "m=" + std::to_string(m) + " " + point_str(g, p) + ": ";
      auto heads = all_simple_reports(g, p);
      const auto& l1 = heads[g.irrep_index("phi_1")];
      run.add(tag + "dim L(phi_1) = 6", l1.dimension == 6, std::to_string(l1.dimension));
      GradedWCharacter want = expected_character(g, {{"phi_1", "1 + q^2"}, {"triv", "q"}, {"sgn", "q"}});
      run.add(tag + "character of L(phi_1)", l1.character == want, l1.character.str(g));
      for (const char* l : {"triv", "sgn"}) {
        int d = heads[g.irrep_index(l)].dimension;
        run.add(tag + "dim L(" + l + ") = 2m", d == 2 * m, std::to_string(d));
      }
      std::vector<int> R;
      for (int i = 2; i <= (m - 1) / 2; ++i) R.push_back(g.irrep_index(phi(i)));
      run.add(tag + "rigid set equals R", rigid_set(g, p) == R && dimension_rigid_set(g, heads) == R);
      int sum = 0;
      for (const auto& h : heads) sum += h.dimension * h.dimension;
      int rad = g.order() * g.order() * g.order() - sum;
      run.add(tag + "Jacobson radical dimension", rad == 8 * m * m * m - 8 * m * m - 2 * m - 30, std::to_string(rad));
    }
  }
}

void dihedral_even_loci(Runner& run) {
  for (int m : {6, 8}) {
    GroupData g = build_dihedral(m);
    const std::vector<std::pair<DihedralRegime, std::vector<Rat>>> rows = {
        {DihedralRegime::generic, {Rat(1), Rat(2)}},
        {DihedralRegime::a_zero, {Rat(0), Rat(1)}},
        {DihedralRegime::b_zero, {Rat(1), Rat(0)}},
        {DihedralRegime::equal, {Rat(1), Rat(1)}},
        {DihedralRegime::opposite, {Rat(1), Rat(-1)}}};
    for (const auto& [regime, values] : rows) {
      ParameterPoint p = make_point(g, values);
      const std::string tag = "m=" + std::to_string(m) + " " + regime_name(regime) + ": ";
      DihedralTableRow row = dihedral_table_row(g, regime);
      auto heads = all_simple_reports(g, p);
      FamilyPartition linkage = linkage_families(g, intrinsic_decomposition(g, heads));
      FamilyPartition euler = euler_families(g, p);
      run.add(tag + "families from the decomposition matrix", linkage.blocks == row.families, linkage.str(g));
      run.add(tag + "Euler families", euler.blocks == row.families, euler.str(g));
      run.add(tag + "CM families", cm_families(g, p).blocks == row.families);
      run.add(tag + "rigid set", rigid_set(g, p) == row.rigid && dimension_rigid_set(g, heads) == row.rigid);
      for (const auto& [label, terms] : expected_even_heads(g, regime)) {
        const auto& h = heads[g.irrep_index(label)];
        GradedWCharacter want = expected_character(g, terms);
        run.add(tag + "L(" + label + ")", h.character == want && h.dimension == want.dimension(g),
                h.character.str(g));
      }
    }
  }
}

void c_zero(Runner& run) {
  std::vector<GroupData> groups;
  for (int m = 2; m <= 8; ++m) {
    groups.push_back(build_cyclic(m, DualAction::contract));
    groups.push_back(build_cyclic(m, DualAction::paper_cyclic));
  }
  for (int m = 5; m <= 8; ++m) groups.push_back(build_dihedral(m));
  for (const auto& g : groups) {
    ParameterPoint p = zero_point(g);
    std::string tag = g.name() + (g.family == GroupFamily::cyclic && g.dual_action == DualAction::paper_cyclic ? " (paper-cyclic)" : "") + ": ";
    auto heads = all_simple_reports(g, p);
    FamilyPartition linkage = linkage_families(g, intrinsic_decomposition(g, heads));
    run.add(tag + "one family", linkage.blocks.size() == 1 && euler_families(g, p).blocks.size() == 1 &&
                                    cm_families(g, p).blocks.size() == 1);
    bool ok = true;
    for (const auto& h : heads) ok = ok && h.dimension == g.irreps[h.irrep].dim && h.rigid;
    run.add(tag + "every head is rigid with dim L = dim lambda",
            ok && static_cast<int>(rigid_set(g, p).size()) == g.irrep_count());
  }
}

void rank_one(Runner& run, std::uint64_t seed) {
  auto check = [&](const GroupData& g, const ParameterPoint& p) {
    const std::string tag = g.name() + " " + (is_zero_point(g, p) ? std::string("zero") : point_str(g, p)) + ": ";
    auto heads = all_simple_reports(g, p);
    FamilyPartition cm = cm_families(g, p);
    std::vector<GradedWCharacter> sc, vc;
    for (const auto& h : heads) sc.push_back(h.character);
    for (int i = 0; i < g.irrep_count(); ++i) vc.push_back(verma_graded_character(g, i));
    DecompositionMatrix d = solve_graded_decomposition(g, sc, vc, &cm);
    auto issues = decomposition_consistency(g, d, cm);
    run.add(tag + "decomposition consistency", issues.empty(), issues.empty() ? "" : issues.front());
    if (is_zero_point(g, p)) {
      bool ok = true;
      for (int i = 0; i < g.irrep_count(); ++i)
        for (int j = 0; j < g.irrep_count(); ++j) ok = ok && d.laurent(i, j) == vc[i].mult[j];
      run.add(tag + "equals the fake-degree expansion", ok);
    }
  };
  GroupData g5 = build_dihedral(5);
  check(g5, generic_sample(g5));
  check(g5, random_point_like(g5, generic_sample(g5), seed));
  check(g5, zero_point(g5));
  GroupData g6 = build_dihedral(6);
  for (auto v : {std::vector<Rat>{Rat(1), Rat(2)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(1), Rat(-1)}})
    check(g6, make_point(g6, v));
  GroupData c4 = build_cyclic(4, DualAction::paper_cyclic);
  check(c4, make_point(c4, {Rat(1), Rat(0), Rat(1)}));
  check(c4, zero_point(c4));
}

}  // namespace

RegressionResult run_regression(const std::string& suite, std::uint64_t seed) {
  Runner run;
  run.result.suite = suite;
  if (suite == "cyclic_m3_table") run.guard(suite, [&] { cyclic_m3_table(run); });
  else if (suite == "cyclic_schur") run.guard(suite, [&] { cyclic_schur(run, seed); });
  else if (suite == "dihedral_odd") run.guard(suite, [&] { dihedral_odd(run, seed); });
  else if (suite == "dihedral_even_loci") run.guard(suite, [&] { dihedral_even_loci(run); });
  else if (suite == "c_zero") run.guard(suite, [&] { c_zero(run); });
  else if (suite == "rank_one") run.guard(suite, [&] { rank_one(run, seed); });
  else throw MathError("unknown suite id '" + suite + "'");
  return run.result;
}

}  // namespace rrca

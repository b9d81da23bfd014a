// Acceptance run: one PASS/FAIL line per criterion with wall time against its budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rrca/exact/parse.hpp"
#include "rrca/families.hpp"
#include "rrca/report.hpp"
#include "rrca/schur.hpp"

using namespace rrca;

namespace {

struct Outcome {
  std::vector<std::string> failures;  // first few messages only
  int checks = 0;
  int failed = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failed <= 8) failures.push_back(what);
  }
};

// Verma modules constructed in criteria 1-5, replayed by criterion 6.
struct VermaLog {
  std::vector<std::pair<GroupData, ParameterPoint>> points;
  std::vector<std::pair<GroupData, int>> generic;  // (group, irrep) built with symbolic parameters
};
VermaLog verma_log;

std::string phi(int i) { return "phi_" + std::to_string(i); }

LaurentQ q_(int e) { return LaurentQ::monomial(e); }

GradedWCharacter make_character(const GroupData& g, const std::vector<std::pair<std::string, LaurentQ>>& terms) {
  GradedWCharacter c;
  c.mult.assign(g.irrep_count(), LaurentQ());
  for (const auto& [label, l] : terms) c.mult[g.irrep_index(label)] += l;
  return c;
}

std::vector<int> sorted_indices(const GroupData& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.irrep_index(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimpleModuleReport> heads_logged(const GroupData& g, const ParameterPoint& p) {
  verma_log.points.emplace_back(g, p);
  return all_simple_reports(g, p);
}

std::vector<int> rigid_by_dimension(const GroupData& g, const std::vector<SimpleModuleReport>& heads) {
  std::vector<int> out;
  for (const auto& h : heads)
    if (h.dimension == g.irreps[h.irrep].dim) out.push_back(h.irrep);
  return out;
}

std::vector<int> rigid_by_commutator(const GroupData& g, const ParameterPoint& p) {
  std::vector<int> out;
  for (int i = 0; i < g.irrep_count(); ++i)
    if (rigid_test(g, i, p).rigid) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- criterion 1

void criterion_chartable(Outcome& out) {
  static const char* expected[3][3] = {
      {"9*k1^2 - 9*k1*k2", "-9*(1 + z)*k1^2 + 9*(1 + z)*k1*k2", "9*z*k1^2 - 9*z*k1*k2"},
      {"9*k1*k2", "9*k1*k2", "9*k1*k2"},
      {"9*k2^2 - 9*k1*k2", "9*z*k2^2 - 9*z*k1*k2", "9*(1 + z)*k1*k2 - 9*(1 + z)*k2^2"}};
  JobSpec job = make_job(GroupFamily::cyclic, 3, {}, false, DualAction::contract, {Computation::chartable});
  ReportDocument doc = run_job(job);
  out.expect(doc.chartable.has_value(), "chartable section present");
  if (!doc.chartable) return;
  VarNames vars = cyclic_parameter_names(3);
  for (int r = 0; r < 3; ++r)
    for (int q = 0; q < 3; ++q) {
      ParamPoly got = parse_param_poly(doc.chartable->entries[r][q], vars, 3);
      out.expect(got == parse_param_poly(expected[r][q], vars, 3),
                 "chi_" + std::to_string(r) + "(Omega Omega^* w^" + std::to_string(q) + ") = " +
                     doc.chartable->entries[r][q]);
    }
  IdentityReport traces = verify_characters_against_verma(3);
  out.expect(traces.ok(), "characters agree with Verma traces");
  GroupData g = build_cyclic(3, DualAction::paper_cyclic);
  for (int r = 0; r < 3; ++r) verma_log.generic.emplace_back(g, r);
}

// ---------------------------------------------------------------- criterion 2

void criterion_schur(Outcome& out) {
  for (int m = 2; m <= 6; ++m) {
    IdentityReport r = verify_schur_identity_expanded(m);
    out.expect(r.ok() && r.checked == m * m * m, "cleared identity m=" + std::to_string(m));
  }
  for (int m = 7; m <= 10; ++m) {
    IdentityReport r = verify_schur_identity_at_points(m, 50, kDefaultSeed + static_cast<unsigned>(m));
    out.expect(r.ok() && r.checked == 50 * m * m * m, "50-point identity m=" + std::to_string(m));
  }
  // S_r = (-1)^{m-1} m^m prod_{t != h} (k_h - k_t) with h = m + 1 - r mod m, written out for m = 3.
  VarNames vars = cyclic_parameter_names(3);
  SchurTable s = schur_elements(3);
  out.expect(s.entries[0] == parse_param_poly("27*k1*(k1 - k2)", vars, 3), "S_0 for m=3");
  out.expect(s.entries[1] == parse_param_poly("27*k1*k2", vars, 3), "S_1 for m=3");
  out.expect(s.entries[2] == parse_param_poly("27*k2*(k2 - k1)", vars, 3), "S_2 for m=3");
}

// ---------------------------------------------------------------- criterion 3

// Least l in 1..m-1 with k_{m+1-r} = k_{m+1-r-l} (indices mod m, k_0 = 0), else m.
int epsilon_oracle(int m, int r, const std::vector<Rat>& k) {
  auto at = [&](int j) {
    j = ((j % m) + m) % m;
    return j == 0 ? Rat(0) : k[j - 1];
  };
  for (int l = 1; l < m; ++l)
    if (at(m + 1 - r) == at(m + 1 - r - l)) return l;
  return m;
}

void criterion_cyclic_dimensions(Outcome& out) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
  for (int m = 2; m <= 8; ++m) {
    GroupData g = build_cyclic(m, DualAction::paper_cyclic);
    for (int sample = 0; sample < 200; ++sample) {
      std::vector<Rat> k;
      for (int i = 1; i < m; ++i) k.emplace_back(num(rng), den(rng));
      ParameterPoint p = make_point(g, k);
      for (const auto& h : heads_logged(g, p)) {
        const int eps = epsilon_oracle(m, h.irrep, k);
        const std::string tag = "m=" + std::to_string(m) + " " + point_str(g, p) + " r=" + std::to_string(h.irrep);
        out.expect(h.dimension == eps, tag + ": dim " + std::to_string(h.dimension) + " vs " + std::to_string(eps));
        Mat<Cyc> tail = Mat<Cyc>::Zero(m, m - eps);
        for (int l = eps; l < m; ++l) tail(l, l - eps) = Cyc(1);
        const Mat<Cyc>& rad = h.radical_basis;
        bool same = rad.cols() == tail.cols() &&
                    (tail.cols() == 0 || intersect_subspaces<Cyc>(rad, tail).cols() == tail.cols());
        out.expect(same, tag + ": radical is not the monomial tail");
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 4

void criterion_odd_dihedral(Outcome& out) {
  for (int m : {5, 7}) {
    GroupData g = build_dihedral(m);
    std::vector<ParameterPoint> points = {make_point(g, {Rat(1)}), make_point(g, {Rat(-7, 3)}),
                                          random_point_like(g, make_point(g, {Rat(1)}), kDefaultSeed)};
    std::vector<std::string> R;
    for (int i = 2; i <= (m - 1) / 2; ++i) R.push_back(phi(i));
    GradedWCharacter want = make_character(g, {{"phi_1", q_(0) + q_(2)}, {"triv", q_(1)}, {"sgn", q_(1)}});
    for (const auto& p : points) {
      const std::string tag = "m=" + std::to_string(m) + " " + point_str(g, p) + ": ";
      auto heads = heads_logged(g, p);
      const auto& l1 = heads[g.irrep_index("phi_1")];
      out.expect(l1.dimension == 6, tag + "dim L(phi_1) = " + std::to_string(l1.dimension));
      out.expect(l1.character == want, tag + "L(phi_1) = " + l1.character.str(g));
      for (const char* l : {"triv", "sgn"}) {
        int d = heads[g.irrep_index(l)].dimension;
        out.expect(d == 2 * m, tag + "dim L(" + l + ") = " + std::to_string(d));
      }
      out.expect(rigid_by_dimension(g, heads) == sorted_indices(g, R), tag + "rigid set by dimension");
      out.expect(rigid_by_commutator(g, p) == sorted_indices(g, R), tag + "rigid set by commutator identity");
      long sum = 0;
      for (const auto& h : heads) sum += static_cast<long>(h.dimension) * h.dimension;
      long jac = static_cast<long>(g.order()) * g.order() * g.order() - sum;
      out.expect(jac == 8L * m * m * m - 8L * m * m - 2L * m - 30, tag + "Jacobson radical " + std::to_string(jac));
    }
  }
}

// ---------------------------------------------------------------- criterion 5

struct EvenRow {
  DihedralRegime regime;
  std::vector<std::vector<std::string>> families;
  std::vector<std::string> rigid;
  std::vector<std::string> cuspidal;
  std::map<std::string, std::vector<std::pair<std::string, LaurentQ>>> heads;
};

// Table rows and listed heads, with the a=0 and b=0 rows exchanged (eps1 <-> eps2),
// the 1-dimensional tail of L(eps_j) in degree m/2 and the phi-sum of L(eps_j) as
// sum_{i=1}^{(m-2)/2} q^{m/2-i} phi_i.
std::vector<EvenRow> even_rows(int m) {
  const int h = (m - 2) / 2, n = m / 2;
  std::vector<std::string> F, R;
  for (int i = 1; i <= h; ++i) F.push_back(phi(i));
  for (int i = 2; i < h; ++i) R.push_back(phi(i));
  auto with = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  std::vector<std::pair<std::string, LaurentQ>> up, down;
  for (int i = 1; i <= h; ++i) {
    up.emplace_back(phi(i), q_(i));
    down.emplace_back(phi(i), q_(n - i));
  }
  auto head = [](std::vector<std::pair<std::string, LaurentQ>> base, std::vector<std::pair<std::string, LaurentQ>> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  };
  const std::vector<std::pair<std::string, LaurentQ>> l_phi1 = {{"phi_1", q_(0) + q_(2)}, {"triv", q_(1)}, {"sgn", q_(1)}};
  const std::vector<std::pair<std::string, LaurentQ>> l_phih = {{phi(h), q_(0) + q_(2)}, {"eps1", q_(1)}, {"eps2", q_(1)}};

  std::vector<EvenRow> rows;
  rows.push_back({DihedralRegime::generic, {{"triv"}, {"sgn"}, {"eps1"}, {"eps2"}, F}, R, F,
                  {{"phi_1", l_phi1}, {phi(h), l_phih}}});
  rows.push_back({DihedralRegime::a_zero,
                  {{"triv", "eps1"}, {"sgn", "eps2"}, F},
                  R,
                  F,
                  {{"phi_1", l_phi1},
                   {phi(h), l_phih},
                   {"triv", head(up, {{"triv", q_(0)}, {"eps2", q_(n)}})},
                   {"sgn", head(up, {{"sgn", q_(0)}, {"eps1", q_(n)}})},
                   {"eps1", head(down, {{"sgn", q_(n)}, {"eps1", q_(0)}})},
                   {"eps2", head(down, {{"triv", q_(n)}, {"eps2", q_(0)}})}}});
  rows.push_back({DihedralRegime::b_zero,
                  {{"triv", "eps2"}, {"sgn", "eps1"}, F},
                  R,
                  F,
                  {{"phi_1", l_phi1},
                   {phi(h), l_phih},
                   {"triv", head(up, {{"triv", q_(0)}, {"eps1", q_(n)}})},
                   {"sgn", head(up, {{"sgn", q_(0)}, {"eps2", q_(n)}})},
                   {"eps1", head(down, {{"triv", q_(n)}, {"eps1", q_(0)}})},
                   {"eps2", head(down, {{"sgn", q_(n)}, {"eps2", q_(0)}})}}});
  rows.push_back({DihedralRegime::equal, {{"triv"}, {"sgn"}, with({"eps1", "eps2"}, F)}, with({"eps1", "eps2", phi(h)}, R),
                  with({"eps1", "eps2"}, F), {{"phi_1", l_phi1}}});
  rows.push_back({DihedralRegime::opposite, {{"eps1"}, {"eps2"}, with({"triv", "sgn"}, F)},
                  with({"triv", "sgn", "phi_1"}, R), with({"triv", "sgn"}, F), {{phi(h), l_phih}}});
  return rows;
}

std::vector<ParameterPoint> regime_points(const GroupData& g, DihedralRegime r) {
  switch (r) {
    case DihedralRegime::generic: return {make_point(g, {Rat(1), Rat(2)}), make_point(g, {Rat(-3), Rat(5, 2)})};
    case DihedralRegime::a_zero: return {make_point(g, {Rat(0), Rat(1)}), make_point(g, {Rat(0), Rat(-4, 3)})};
    case DihedralRegime::b_zero: return {make_point(g, {Rat(1), Rat(0)}), make_point(g, {Rat(5), Rat(0)})};
    case DihedralRegime::equal: return {make_point(g, {Rat(1), Rat(1)}), make_point(g, {Rat(-2, 7), Rat(-2, 7)})};
    case DihedralRegime::opposite: return {make_point(g, {Rat(1), Rat(-1)}), make_point(g, {Rat(3), Rat(-3)})};
    default: return {};
  }
}

std::vector<std::vector<int>> block_indices(const GroupData& g, const std::vector<std::vector<std::string>>& fams) {
  std::vector<std::vector<int>> out;
  for (const auto& f : fams) out.push_back(sorted_indices(g, f));
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionMatrix decomposition_from(const GroupData& g, const std::vector<SimpleModuleReport>& heads,
                                       const FamilyPartition* partition) {
  std::vector<GradedWCharacter> sc, vc;
  for (const auto& h : heads) sc.push_back(h.character);
  for (int i = 0; i < g.irrep_count(); ++i) vc.push_back(verma_graded_character(g, i));
  return solve_graded_decomposition(g, sc, vc, partition);
}

void criterion_even_dihedral(Outcome& out) {
  for (int m : {6, 8}) {
    GroupData g = build_dihedral(m);
    for (const EvenRow& row : even_rows(m)) {
      for (const ParameterPoint& p : regime_points(g, row.regime)) {
        const std::string tag = "m=" + std::to_string(m) + " " + point_str(g, p) + ": ";
        out.expect(classify_dihedral(g, p) == row.regime, tag + "regime");
        auto heads = heads_logged(g, p);
        auto want_blocks = block_indices(g, row.families);
        FamilyPartition cm = cm_families(g, p);
        auto cm_blocks = cm.blocks;
        std::sort(cm_blocks.begin(), cm_blocks.end());
        out.expect(cm_blocks == want_blocks, tag + "CM families " + cm.str(g));
        FamilyPartition linked = linkage_families(g, decomposition_from(g, heads, nullptr));
        auto linked_blocks = linked.blocks;
        std::sort(linked_blocks.begin(), linked_blocks.end());
        out.expect(linked_blocks == want_blocks, tag + "families from the decomposition matrix " + linked.str(g));
        std::vector<int> cusp;
        for (std::size_t b = 0; b < cm.blocks.size() && b < cm.cuspidal.size(); ++b)
          if (cm.cuspidal[b]) cusp.insert(cusp.end(), cm.blocks[b].begin(), cm.blocks[b].end());
        std::sort(cusp.begin(), cusp.end());
        out.expect(cusp == sorted_indices(g, row.cuspidal), tag + "cuspidal families");
        out.expect(rigid_by_dimension(g, heads) == sorted_indices(g, row.rigid), tag + "rigid set by dimension");
        out.expect(rigid_by_commutator(g, p) == sorted_indices(g, row.rigid), tag + "rigid set by commutator identity");
        for (const auto& [label, terms] : row.heads) {
          const auto& h = heads[g.irrep_index(label)];
          GradedWCharacter want = make_character(g, terms);
          out.expect(h.character == want, tag + "L(" + label + ") = " + h.character.str(g));
          out.expect(h.dimension == want.dimension(g), tag + "dim L(" + label + ")");
        }
        if (row.regime == DihedralRegime::a_zero || row.regime == DihedralRegime::b_zero)
          for (const char* l : {"triv", "sgn", "eps1", "eps2"})
            out.expect(heads[g.irrep_index(l)].dimension == m, tag + "dim L(" + l + ") = m");
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 6

void criterion_relations(Outcome& out) {
  int modules = 0;
  for (const auto& [g, p] : verma_log.points)
    for (int i = 0; i < g.irrep_count(); ++i) {
      RelationReport r = verify_relations(g, build_verma(g, i, p));
      ++modules;
      out.expect(r.ok() && r.checked > 0, g.name() + " " + point_str(g, p) + " " + g.irreps[i].label + ": " +
                                              (r.failures.empty() ? "" : r.failures.front()));
    }
  for (const auto& [g, i] : verma_log.generic) {
    RelationReport r = verify_relations(g, build_generic_verma(g, i));
    ++modules;
    out.expect(r.ok() && r.checked > 0, g.name() + " generic " + g.irreps[i].label);
  }
  out.expect(modules > 5000, "Verma count " + std::to_string(modules));
}

// ---------------------------------------------------------------- criterion 7

void criterion_fake_degrees(Outcome& out) {
  std::vector<GroupData> groups;
  for (int m = 2; m <= 10; ++m) {
    groups.push_back(build_cyclic(m, DualAction::contract));
    groups.push_back(build_cyclic(m, DualAction::paper_cyclic));
    if (m >= 5) groups.push_back(build_dihedral(m));
  }
  for (const auto& g : groups) {
    CoinvariantBasis cb = coinvariant_basis(g);
    out.expect(cb.size() == g.order(), g.name() + " coinvariant dimension");
    Rat total(0);
    for (int i = 0; i < g.irrep_count(); ++i) {
      // Direct count: multiplicity of lambda* in each graded piece from the traces on the basis.
      LaurentQ direct;
      for (int d = 0; d <= cb.top_degree; ++d) {
        Cyc acc(0);
        for (int e = 0; e < g.order(); ++e) {
          Cyc tr(0);
          for (int b = 0; b < cb.size(); ++b)
            if (cb.degrees[b] == d) tr += cb.action[e](b, b);
          acc += tr * g.character(g.dual_irrep(i), e).conj();
        }
        acc = acc / Cyc(g.order());
        out.expect(acc.is_rational(), g.name() + " rational multiplicity");
        if (acc.is_rational() && !acc.is_zero()) direct.add(d, acc.rational_value());
      }
      LaurentQ molien = fake_degree(g, i);
      out.expect(molien == direct, g.name() + " " + g.irreps[i].label + ": " + molien.str() + " vs " + direct.str());
      total += molien.at_one() * Rat(g.irreps[i].dim);
    }
    out.expect(total == Rat(g.order()), g.name() + " sum f(1) dim = |W|");
  }
}

// ---------------------------------------------------------------- criterion 8

void check_decomposition(Outcome& out, const GroupData& g, const ParameterPoint& p) {
  const std::string tag = g.name() + " " + point_str(g, p) + ": ";
  auto heads = heads_logged(g, p);
  FamilyPartition cm = cm_families(g, p);
  DecompositionMatrix d = decomposition_from(g, heads, nullptr);
  const int n = g.irrep_count();
  Mat<Rat> at_one = Mat<Rat>::Zero(n, n);
  for (int l = 0; l < n; ++l)
    for (int mu = 0; mu < n; ++mu) {
      auto e = d.laurent(l, mu);
      out.expect(e.has_value() && e->has_natural_coefficients(), tag + "entry in N[q]");
      if (!e) continue;
      at_one(l, mu) = e->at_one();
      if (cm.block_of(l) != cm.block_of(mu)) out.expect(e->is_zero(), tag + "entry outside the CM blocks");
      if (l == mu) out.expect(e->coeff(0) == Rat(1) && e->min_exponent() == 0, tag + "diagonal constant term");
    }
  for (const auto& block : cm.blocks) {
    Mat<Rat> sub(block.size(), block.size());
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = 0; b < block.size(); ++b) sub(a, b) = at_one(block[a], block[b]);
    out.expect(rank<Rat>(sub) == 1, tag + "rank one at q=1");
    for (int lam : block)
      for (int mu : block)
        for (int eta : block)
          out.expect(at_one(mu, eta) * Rat(g.irreps[lam].dim) == at_one(lam, eta) * Rat(g.irreps[mu].dim),
                     tag + "dimension ratio");
  }
  DecompositionMatrix blockwise = decomposition_from(g, heads, &cm);
  for (int l = 0; l < n; ++l)
    for (int mu = 0; mu < n; ++mu)
      out.expect(blockwise.entries(l, mu) == d.entries(l, mu), tag + "block-wise solve agrees");
  if (is_zero_point(g, p))
    for (int l = 0; l < n; ++l)
      for (int mu = 0; mu < n; ++mu) {
        LaurentQ want;
        for (int e = 0; e < n; ++e) {
          Cyc mult = g.tensor_multiplicity(l, e, mu);
          if (!mult.is_zero()) want += fake_degree(g, g.dual_irrep(e)) * LaurentQ(mult.rational_value());
        }
        auto got = d.laurent(l, mu);
        out.expect(got && *got == want, tag + "f-expansion at c=0");
      }
}

void criterion_decomposition(Outcome& out) {
  for (int m : {5, 7}) {
    GroupData g = build_dihedral(m);
    check_decomposition(out, g, make_point(g, {Rat(1)}));
    check_decomposition(out, g, zero_point(g));
  }
  for (int m : {6, 8}) {
    GroupData g = build_dihedral(m);
    for (const auto& v : std::vector<std::vector<Rat>>{{Rat(1), Rat(2)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)},
                                                       {Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(0), Rat(0)}})
      check_decomposition(out, g, make_point(g, v));
  }
  for (auto mode : {DualAction::contract, DualAction::paper_cyclic}) {
    GroupData g = build_cyclic(4, mode);
    check_decomposition(out, g, make_point(g, {Rat(1), Rat(0), Rat(1)}));
    check_decomposition(out, g, make_point(g, {Rat(1), Rat(2), Rat(3)}));
    check_decomposition(out, g, zero_point(g));
    GroupData g6 = build_cyclic(6, mode);
    check_decomposition(out, g6, make_point(g6, {Rat(1), Rat(1), Rat(0), Rat(2), Rat(0)}));
  }
}

// ---------------------------------------------------------------- criterion 9

void check_zero(Outcome& out, const GroupData& g) {
  ParameterPoint p = zero_point(g);
  FamilyPartition cm = cm_families(g, p);
  out.expect(cm.blocks.size() == 1 && static_cast<int>(cm.blocks[0].size()) == g.irrep_count(),
             g.name() + ": one family");
  FamilyPartition eu = euler_families(g, p);
  out.expect(eu.blocks.size() == 1, g.name() + ": one Euler family");
  auto heads = heads_logged(g, p);
  for (const auto& h : heads) {
    out.expect(h.dimension == g.irreps[h.irrep].dim && h.rigid, g.name() + " " + g.irreps[h.irrep].label + ": rigid");
    out.expect(rigid_test(g, h.irrep, p).rigid, g.name() + " " + g.irreps[h.irrep].label + ": commutator identity");
  }
}

void criterion_zero(Outcome& out) {
  for (int m = 2; m <= 8; ++m) {
    check_zero(out, build_cyclic(m, DualAction::contract));
    check_zero(out, build_cyclic(m, DualAction::paper_cyclic));
    if (m >= 5) check_zero(out, build_dihedral(m));
  }
}

// ---------------------------------------------------------------- criterion 10

using Shape = std::multiset<std::pair<int, std::string>>;

Shape shape(const std::vector<SimpleModuleReport>& heads) {
  Shape s;
  for (const auto& h : heads) s.emplace(h.dimension, h.poincare.str());
  return s;
}

std::multiset<std::size_t> block_sizes(const FamilyPartition& f) {
  std::multiset<std::size_t> s;
  for (const auto& b : f.blocks) s.insert(b.size());
  return s;
}

void criterion_conventions(Outcome& out) {
  std::mt19937_64 rng(kDefaultSeed + 10);
  std::uniform_int_distribution<int> num(-2, 2);
  for (int m = 2; m <= 6; ++m) {
    GroupData gc = build_cyclic(m, DualAction::contract);
    GroupData gp = build_cyclic(m, DualAction::paper_cyclic);
    std::vector<std::vector<Rat>> points;
    std::vector<Rat> sample, zero(m - 1, Rat(0));
    for (int i = 1; i < m; ++i) sample.emplace_back(i);
    points.push_back(sample);
    points.push_back(zero);
    for (int t = 0; t < 30; ++t) {
      std::vector<Rat> k;
      for (int i = 1; i < m; ++i) k.emplace_back(num(rng));
      points.push_back(k);
    }
    for (const auto& k : points) {
      ParameterPoint pc = make_point(gc, k), pp = make_point(gp, k);
      const std::string tag = "m=" + std::to_string(m) + " " + point_str(gc, pc) + ": ";
      auto hc = heads_logged(gc, pc), hp = heads_logged(gp, pp);
      out.expect(shape(hc) == shape(hp), tag + "dimensions and Poincare series");
      out.expect(block_sizes(cm_families(gc, pc)) == block_sizes(cm_families(gp, pp)), tag + "CM family shape");
      out.expect(block_sizes(euler_families(gc, pc)) == block_sizes(euler_families(gp, pp)), tag + "Euler family shape");
      FamilyPartition lc = linkage_families(gc, decomposition_from(gc, hc, nullptr));
      FamilyPartition lp = linkage_families(gp, decomposition_from(gp, hp, nullptr));
      out.expect(block_sizes(lc) == block_sizes(lp), tag + "linkage family shape");
    }
  }
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cyclic m=3 character table", 1.0, criterion_chartable},
      {2, "cyclic Schur element identity", 30.0, criterion_schur},
      {3, "cyclic simple dimensions and radical tails", 60.0, criterion_cyclic_dimensions},
      {4, "odd dihedral heads, rigid set, Jacobson radical", 30.0, criterion_odd_dihedral},
      {5, "even dihedral table rows and listed heads", 120.0, criterion_even_dihedral},
      {6, "defining relations on every Verma module of 1-5", 0.0, criterion_relations},
      {7, "fake degrees: Molien vs direct multiplicity", 10.0, criterion_fake_degrees},
      {8, "graded decomposition consistency", 30.0, criterion_decomposition},
      {9, "c=0 degeneration", 10.0, criterion_zero},
      {10, "convention independence of the cyclic dual action", 0.0, criterion_conventions},
  };
  std::printf("even dihedral data: table rows a=0 and b=0 are used with eps1 <-> eps2 exchanged\n");
  int failed = 0;
  double total = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      ++out.failed;
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    bool over = c.budget_seconds > 0 && secs > c.budget_seconds;
    bool ok = out.failed == 0 && !over;
    failed += ok ? 0 : 1;
    char budget[32] = "no budget";
    if (c.budget_seconds > 0) std::snprintf(budget, sizeof budget, "budget %.0f s", c.budget_seconds);
    std::printf("%s criterion %2d: %-52s %4d checks  %7.2f s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.checks, secs, budget);
    if (over) std::printf("       over the time budget\n");
    for (const auto& f : out.failures) std::printf("       %s\n", f.c_str());
    if (out.failed > 8) std::printf("       ... %d failed checks in total\n", out.failed);
  }
  std::printf("%s: %d of %zu criteria passed in %.2f s\n", failed ? "FAIL" : "PASS",
              static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed ? 1 : 0;
}

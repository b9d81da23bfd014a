#include "rrca/families.hpp"

#include <algorithm>
#include <sstream>

namespace rrca {

int FamilyPartition::block_of(int irrep) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), irrep) != blocks[b].end()) return static_cast<int>(b);
  throw MathError("irreducible not covered by the partition");
}

std::string FamilyPartition::str(const GroupData& g) const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << " ";
    os << "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? "," : "") << g.irreps[blocks[b][i]].label;
    os << "}";
  }
  return os.str();
}

namespace {

void normalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

template <class Key, class Eq>
std::vector<std::vector<int>> group_by(int n, const std::vector<Key>& keys, Eq eq) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> rep;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size() && !placed; ++b)
      if (eq(keys[rep[b]], keys[i])) {
        blocks[b].push_back(i);
        placed = true;
      }
    if (!placed) {
      blocks.push_back({i});
      rep.push_back(i);
    }
  }
  normalize(blocks);
  return blocks;
}

}  // namespace

FamilyPartition euler_families(const GroupData& g, const ParameterPoint& p) {
  FamilyPartition out;
  out.provenance = "euler";
  const int n = g.irrep_count();
  if (p.generic) {
    // chi_lambda(s) / chi_lambda(1) must agree on every reflection
    std::vector<std::vector<Cyc>> keys(n);
    for (int i = 0; i < n; ++i)
      for (const auto& r : g.reflections)
        keys[i].push_back(g.character(i, r.element) * Cyc(Rat(1, g.irreps[i].dim)));
    out.blocks = group_by(n, keys, [](const auto& a, const auto& b) { return a == b; });
    return out;
  }
  std::vector<Cyc> c = reflection_values(g, p);
  std::vector<Cyc> omega;
  for (int i = 0; i < n; ++i) omega.push_back(euler_scalar<Cyc>(g, i, c));
  out.blocks = group_by(n, omega, [](const Cyc& a, const Cyc& b) { return a == b; });
  return out;
}

DihedralTableRow dihedral_table_row(const GroupData& g, DihedralRegime regime) {
  if (g.family != GroupFamily::dihedral) throw MathError("dihedral table needs a dihedral group");
  const int m = g.m;
  DihedralTableRow row;
  auto id = [&](const std::string& l) { return g.irrep_index(l); };
  std::vector<int> F;
  for (int i = 1; i <= (m - 1) / 2; ++i) F.push_back(id("phi_" + std::to_string(i)));
  std::vector<int> R;
  if (m % 2 == 1) {
    for (int i = 2; i <= (m - 1) / 2; ++i) R.push_back(id("phi_" + std::to_string(i)));
  } else {
    for (int i = 2; i < (m - 2) / 2; ++i) R.push_back(id("phi_" + std::to_string(i)));
  }
  auto join = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (regime == DihedralRegime::zero) {
    std::vector<int> all;
    for (int i = 0; i < g.irrep_count(); ++i) all.push_back(i);
    row.families = {all};
    row.rigid = all;
  } else if (m % 2 == 1) {
    row.families = {{id("triv")}, {id("sgn")}, F};
    row.rigid = R;
    row.cuspidal = F;
  } else {
    const int t = id("triv"), s = id("sgn"), e1 = id("eps1"), e2 = id("eps2");
    const int phi1 = id("phi_1"), phih = id("phi_" + std::to_string((m - 2) / 2));
    switch (regime) {
      case DihedralRegime::generic:
        row.families = {{t}, {s}, {e1}, {e2}, F};
        row.rigid = R;
        row.cuspidal = F;
        break;
      case DihedralRegime::a_zero:  // only c(s) = b is nonzero
        row.families = {{t, e1}, {s, e2}, F};
        row.rigid = R;
        row.cuspidal = F;
        break;
      case DihedralRegime::b_zero:  // only c(t) = a is nonzero
        row.families = {{t, e2}, {s, e1}, F};
        row.rigid = R;
        row.cuspidal = F;
        break;
      case DihedralRegime::equal:
        row.families = {{t}, {s}, join({e1, e2}, F)};
        row.rigid = join({e1, e2, phih}, R);
        row.cuspidal = join({e1, e2}, F);
        break;
      case DihedralRegime::opposite:
        row.families = {{e1}, {e2}, join({t, s}, F)};
        row.rigid = join({t, s, phi1}, R);
        row.cuspidal = join({t, s}, F);
        break;
      case DihedralRegime::zero:
        break;
    }
  }
  normalize(row.families);
  std::sort(row.rigid.begin(), row.rigid.end());
  std::sort(row.cuspidal.begin(), row.cuspidal.end());
  return row;
}

FamilyPartition cm_families(const GroupData& g, const ParameterPoint& p) {
  if (!p.generic && is_zero_point(g, p)) {
    FamilyPartition out;
    out.provenance = "cm:zero";
    std::vector<int> all;
    for (int i = 0; i < g.irrep_count(); ++i) all.push_back(i);
    out.blocks = {all};
    out.cuspidal = {true};
    return out;
  }
  if (g.family == GroupFamily::cyclic) {
    FamilyPartition out = euler_families(g, p);
    out.provenance = "cm:cyclic-euler";
    return out;
  }
  DihedralTableRow row = dihedral_table_row(g, classify_dihedral(g, p));
  FamilyPartition out;
  out.provenance = "cm:dihedral-table";
  out.blocks = row.families;
  for (const auto& b : out.blocks) {
    bool cusp = !b.empty();
    for (int i : b) cusp = cusp && std::find(row.cuspidal.begin(), row.cuspidal.end(), i) != row.cuspidal.end();
    out.cuspidal.push_back(cusp);
  }
  return out;
}

namespace {

std::vector<ParamPoly> parameter_values(const GroupData& g, const ParameterPoint& p) {
  std::vector<ParamPoly> out;
  if (p.generic) return generic_reflection_values(g);
  for (const auto& c : reflection_values(g, p)) out.emplace_back(c);
  return out;
}

RigidityResult rigidity(const GroupData& g, int irrep, const ParameterPoint& p, bool traced) {
  std::vector<ParamPoly> c = parameter_values(g, p);
  const int d = traced ? 1 : g.irreps[irrep].dim;
  RigidityResult res;
  res.rigid = true;
  for (int i = 0; i < g.rank && res.rigid; ++i)
    for (int j = 0; j < g.rank && res.rigid; ++j) {
      Mat<ParamPoly> acc = Mat<ParamPoly>::Zero(d, d);
      for (std::size_t s = 0; s < g.reflections.size(); ++s) {
        const Reflection& r = g.reflections[s];
        ParamPoly f = ParamPoly(cherednik_coefficient(g, r, i, j)) * c[s];
        if (traced) {
          acc(0, 0) += f * ParamPoly(g.character(irrep, r.element));
        } else {
          acc += g.irreps[irrep].matrices[r.element].cast<ParamPoly>() * f;
        }
      }
      if (!is_zero_matrix<ParamPoly>(acc)) {
        res.rigid = false;
        res.y_index = i;
        res.x_index = j;
        res.residual = acc;
      }
    }
  return res;
}

}  // namespace

RigidityResult rigid_test(const GroupData& g, int irrep, const ParameterPoint& p) {
  return rigidity(g, irrep, p, false);
}

RigidityResult weakly_rigid_test(const GroupData& g, int irrep, const ParameterPoint& p) {
  return rigidity(g, irrep, p, true);
}

std::vector<bool> good_family_promotion(const GroupData& g, const FamilyPartition& euler) {
  std::vector<bool> good;
  for (const auto& b : euler.blocks) {
    int super = 0;
    for (int i : b) super += is_supersingular(g, i) ? 1 : 0;
    const int n = static_cast<int>(b.size());
    good.push_back(n == 1 || (n == 2 && super >= 1) || (n == 3 && super == 3));
  }
  return good;
}

std::vector<std::string> cross_validate_families(const GroupData& g, const FamilyPartition& cm,
                                                 const FamilyPartition& euler,
                                                 const std::vector<SimpleModuleReport>& simples) {
  std::vector<std::string> issues;
  for (const auto& b : cm.blocks) {
    int e = euler.block_of(b.front());
    for (int i : b)
      if (euler.block_of(i) != e)
        issues.push_back("CM family " + cm.str(g) + " does not refine the Euler families " + euler.str(g));
  }
  for (const auto& s : simples) {
    bool singleton = cm.blocks[cm.block_of(s.irrep)].size() == 1;
    if (singleton != (s.dimension == g.order()))
      issues.push_back("singleton family of " + g.irreps[s.irrep].label + " disagrees with head dimension " +
                       std::to_string(s.dimension));
  }
  std::vector<bool> good = good_family_promotion(g, euler);
  for (std::size_t b = 0; b < euler.blocks.size(); ++b) {
    if (!good[b]) continue;
    bool found = false;
    for (const auto& c : cm.blocks) found = found || c == euler.blocks[b];
    if (!found) issues.push_back("good Euler family is not a CM family");
  }
  return issues;
}

std::optional<LaurentQ> DecompositionMatrix::laurent(int row, int col) const { return entries(row, col).to_laurent(); }

DecompositionMatrix solve_graded_decomposition(const GroupData& g, const std::vector<GradedWCharacter>& simple_chars,
                                               const std::vector<GradedWCharacter>& verma_chars,
                                               const FamilyPartition* partition) {
  const int n = g.irrep_count();
  if (static_cast<int>(simple_chars.size()) != n || static_cast<int>(verma_chars.size()) != n)
    throw MathError("inconsistent input data: character count");
  std::vector<std::vector<int>> blocks;
  if (partition) {
    blocks = partition->blocks;
  } else {
    blocks.emplace_back();
    for (int i = 0; i < n; ++i) blocks.back().push_back(i);
  }
  DecompositionMatrix d;
  d.entries = Mat<RatFunc>::Zero(n, n);
  for (const auto& block : blocks) {
    const int k = static_cast<int>(block.size());
    Mat<RatFunc> a(n, k);  // a(eta, j) = [L(block[j]) : eta]
    for (int eta = 0; eta < n; ++eta)
      for (int j = 0; j < k; ++j) a(eta, j) = RatFunc(simple_chars[block[j]].mult[eta]);
    for (int lam : block) {
      Vec<RatFunc> v(n);
      for (int eta = 0; eta < n; ++eta) v(eta) = RatFunc(verma_chars[lam].mult[eta]);
      Vec<RatFunc> x;
      try {
        x = solve_unique<RatFunc>(a, v);
      } catch (const MathError& e) {
        throw MathError(std::string("inconsistent input data: ") + e.what());
      }
      for (int j = 0; j < k; ++j) {
        auto l = x(j).to_laurent();
        if (!l || !l->has_natural_coefficients())
          throw MathError("inconsistent input data: decomposition entry " + x(j).str() + " is not in N[q]");
        d.entries(lam, block[j]) = x(j);
      }
    }
  }
  return d;
}

FamilyPartition linkage_families(const GroupData& g, const DecompositionMatrix& d) {
  const int n = g.irrep_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!d.entries(i, j).is_zero()) parent[find(i)] = find(j);
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = find(i);
  FamilyPartition out;
  out.provenance = "cm:linkage";
  out.blocks = group_by(n, root, [](int a, int b) { return a == b; });
  return out;
}

std::vector<std::string> decomposition_consistency(const GroupData& g, const DecompositionMatrix& d,
                                                   const FamilyPartition& partition) {
  std::vector<std::string> issues;
  const int n = g.irrep_count();
  std::vector<std::vector<LaurentQ>> e(n, std::vector<LaurentQ>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto l = d.laurent(i, j);
      if (!l || !l->has_natural_coefficients()) {
        issues.push_back("entry (" + g.irreps[i].label + ", " + g.irreps[j].label + ") is not in N[q]");
        continue;
      }
      e[i][j] = *l;
      if (partition.block_of(i) != partition.block_of(j) && !l->is_zero())
        issues.push_back("entry outside the family blocks");
    }
  for (int i = 0; i < n; ++i)
    if (e[i][i].coeff(0) != Rat(1)) issues.push_back("diagonal entry of " + g.irreps[i].label + " lacks constant term 1");
  for (const auto& block : partition.blocks) {
    Mat<Rat> at_one(block.size(), block.size());
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = 0; b < block.size(); ++b) at_one(a, b) = e[block[a]][block[b]].at_one();
    if (rank<Rat>(at_one) != 1) issues.push_back("decomposition block at q = 1 is not of rank 1");
    for (int lam : block)
      for (int mu : block)
        for (int eta : block) {
          Rat lhs = e[mu][eta].at_one() * Rat(g.irreps[lam].dim);
          Rat rhs = e[lam][eta].at_one() * Rat(g.irreps[mu].dim);
          if (lhs != rhs) issues.push_back("rows of " + g.irreps[lam].label + " and " + g.irreps[mu].label + " are not proportional to dimensions");
        }
  }
  return issues;
}

}  // namespace rrca

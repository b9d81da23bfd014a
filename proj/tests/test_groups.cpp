#include <gtest/gtest.h>

#include "rrca/invariants.hpp"

using namespace rrca;

namespace {

Cyc inner(const GroupData& g, int a, int b) {
  Cyc s(0);
  for (int e = 0; e < g.order(); ++e) s += g.character(a, e) * g.character(b, e).conj();
  return s / Cyc(g.order());
}

LaurentQ poly_from(const std::vector<int>& coeffs) {
  LaurentQ l;
  for (std::size_t i = 0; i < coeffs.size(); ++i) l.add(static_cast<int>(i), Rat(coeffs[i]));
  return l;
}

// Graded multiplicity of lambda* read off the traces of the group on the coinvariant basis.
LaurentQ fake_degree_from_traces(const GroupData& g, const CoinvariantBasis& cb, int irrep) {
  LaurentQ out;
  const int want = g.dual_irrep(irrep);
  for (int d = 0; d <= cb.top_degree; ++d) {
    std::vector<Cyc> cls(g.classes.size(), Cyc(0));
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      int e = g.classes[c][0];
      for (int i = 0; i < cb.size(); ++i)
        if (cb.degrees[i] == d) cls[c] += cb.action[e](i, i);
    }
    Cyc mult = g.decompose(cls)[want];
    EXPECT_TRUE(mult.is_rational());
    if (!mult.is_zero()) out.add(d, mult.rational_value());
  }
  return out;
}

}  // namespace

TEST(Groups, IrrepCounts) {
  for (int m = 2; m <= 9; ++m) EXPECT_EQ(build_cyclic(m).irrep_count(), m);
  EXPECT_EQ(build_dihedral(5).irrep_count(), 4);
  EXPECT_EQ(build_dihedral(6).irrep_count(), 6);
  EXPECT_EQ(build_dihedral(7).irrep_count(), 5);
  EXPECT_EQ(build_dihedral(12).irrep_count(), 9);
  GroupData g = build_dihedral(8);
  EXPECT_EQ(g.order(), 16);
  EXPECT_EQ(g.reflections.size(), 8u);
  EXPECT_EQ(g.reflection_class_count, 2);
  EXPECT_EQ(g.parameter_names->size(), 2u);
  EXPECT_EQ(build_dihedral(7).reflection_class_count, 1);
}

TEST(Groups, CharacterValues) {
  GroupData c5 = build_cyclic(5);
  EXPECT_EQ(c5.character(2, 3), Cyc::zeta(5));
  GroupData d7 = build_dihedral(7);
  const Mat<Cyc>& phi3 = d7.irreps[d7.irrep_index("phi_3")].matrices[1];
  EXPECT_EQ(phi3(0, 0), Cyc::zeta(7, 3));
  EXPECT_EQ(phi3(1, 1), Cyc::zeta(7, -3));
  EXPECT_TRUE(phi3(0, 1).is_zero());
  EXPECT_TRUE(phi3(1, 0).is_zero());
}

TEST(Groups, EvenLinearCharacters) {
  GroupData g = build_dihedral(6);
  int s = g.find({0, 1}), t = g.find({1, 1}), r = g.find({1, 0});
  int e1 = g.irrep_index("eps1"), e2 = g.irrep_index("eps2");
  EXPECT_EQ(g.character(e1, s), Cyc(1));
  EXPECT_EQ(g.character(e1, t), Cyc(-1));
  EXPECT_EQ(g.character(e1, r), Cyc(-1));
  EXPECT_EQ(g.character(e2, s), Cyc(-1));
  EXPECT_EQ(g.character(e2, t), Cyc(1));
}

TEST(Groups, CharacterOrthonormality) {
  std::vector<GroupData> gs;
  for (int m = 2; m <= 7; ++m) gs.push_back(build_cyclic(m, DualAction::paper_cyclic));
  for (int m = 5; m <= 10; ++m) gs.push_back(build_dihedral(m));
  for (const auto& g : gs) {
    int sum_sq = 0;
    for (int a = 0; a < g.irrep_count(); ++a) {
      sum_sq += g.irreps[a].dim * g.irreps[a].dim;
      for (int b = 0; b < g.irrep_count(); ++b) EXPECT_EQ(inner(g, a, b), Cyc(a == b ? 1 : 0)) << g.name();
    }
    EXPECT_EQ(sum_sq, g.order());
  }
}

TEST(Groups, RepresentationsAreHomomorphisms) {
  GroupData g = build_dihedral(6);
  for (const auto& rep : g.irreps)
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        EXPECT_TRUE(matrices_equal<Cyc>(multiply<Cyc>(rep.matrices[a], rep.matrices[b]),
                                        rep.matrices[g.multiply(a, b)]));
}

TEST(Groups, CyclicCherednikCoefficient) {
  for (auto mode : {DualAction::contract, DualAction::paper_cyclic}) {
    GroupData g = build_cyclic(5, mode);
    for (const auto& s : g.reflections) EXPECT_EQ(cherednik_coefficient(g, s, 0, 0), Cyc(1));
  }
}

TEST(Groups, DihedralCherednikCoefficients) {
  for (int m : {5, 6, 7}) {
    GroupData g = build_dihedral(m);
    for (const auto& s : g.reflections) {
      int l = g.elements[s.element].rotation;
      Cyc listed[2][2] = {{Cyc(-1), Cyc::zeta(m, -l)}, {Cyc::zeta(m, l), Cyc(-1)}};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Cyc v = cherednik_coefficient(g, s, i, j);
          EXPECT_EQ(v * Cyc(-2), listed[i][j]) << m << " " << l << " " << i << j;
        }
    }
  }
}

TEST(Groups, CherednikCoefficientScalingInvariance) {
  GroupData g = build_dihedral(5);
  for (const auto& s : g.reflections) {
    Reflection scaled = s;
    scaled.root = s.root * Cyc(3);
    scaled.coroot = s.coroot * (Cyc(Rat(-1, 2)) + Cyc::zeta(5));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        EXPECT_EQ(cherednik_coefficient(g, scaled, i, j), cherednik_coefficient(g, s, i, j));
  }
}

TEST(Groups, TensorMultiplicities) {
  GroupData g = build_dihedral(5);
  int p1 = g.irrep_index("phi_1"), p2 = g.irrep_index("phi_2");
  EXPECT_EQ(g.tensor_multiplicity(p1, p1, g.irrep_index("triv")), Cyc(1));
  EXPECT_EQ(g.tensor_multiplicity(p1, p1, g.irrep_index("sgn")), Cyc(1));
  EXPECT_EQ(g.tensor_multiplicity(p1, p1, p2), Cyc(1));
  EXPECT_EQ(g.tensor_multiplicity(p1, p1, p1), Cyc(0));
}

TEST(Invariants, BuchbergerCompletesDihedralIdeal) {
  for (int m : {5, 6}) {
    GroupData g = build_dihedral(m);
    auto inv = fundamental_invariants(g);
    ASSERT_EQ(inv.size(), 2u);
    GroebnerBasis gb = buchberger(inv);
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
    LexPoly<Rat> x2pow = LexPoly<Rat>::term(Rat(1), Monomial::variable(1, m + 1));
    EXPECT_TRUE(normal_form(x2pow, gb).is_zero());
    bool has_x2_power = false;
    for (const auto& p : gb.generators)
      if (p.leading_monomial() == Monomial::variable(1, m + 1)) has_x2_power = true;
    EXPECT_TRUE(has_x2_power) << m;
  }
  EXPECT_FALSE(satisfies_buchberger_criterion(
      GroebnerBasis{fundamental_invariants(build_dihedral(5))}));
}

TEST(Invariants, Degrees) {
  EXPECT_EQ(invariant_degrees(build_cyclic(4)), (std::vector<int>{4}));
  EXPECT_EQ(invariant_degrees(build_dihedral(7)), (std::vector<int>{2, 7}));
}

TEST(Invariants, InvariantsAreInvariant) {
  GroupData g = build_dihedral(6);
  for (const auto& f : fundamental_invariants(g)) {
    LexPoly<Cyc> fc;
    for (const auto& [mono, c] : f.terms()) fc.add_term(mono, Cyc(c));
    for (int e = 0; e < g.order(); ++e) EXPECT_EQ(act_on_polynomial(g, e, fc), fc);
  }
}

TEST(Invariants, PoincareSeries) {
  EXPECT_EQ(coinvariant_poincare(build_cyclic(4)), poly_from({1, 1, 1, 1}));
  EXPECT_EQ(coinvariant_poincare(build_dihedral(5)), poly_from({1, 2, 2, 2, 2, 1}));
  EXPECT_EQ(coinvariant_poincare(build_dihedral(6)), poly_from({1, 2, 2, 2, 2, 2, 1}));
  CoinvariantBasis cb = coinvariant_basis(build_dihedral(6));
  EXPECT_EQ(cb.size(), 12);
  EXPECT_EQ(cb.top_degree, 6);
  EXPECT_EQ(cb.index_of(Monomial()), 0);
  EXPECT_EQ(cb.index_of(Monomial::variable(1, 7)), -1);
}

TEST(Invariants, FakeDegreesCyclic) {
  const int m = 5;
  GroupData contract = build_cyclic(m, DualAction::contract);
  GroupData reversed = build_cyclic(m, DualAction::paper_cyclic);
  for (int r = 0; r < m; ++r) {
    EXPECT_EQ(fake_degree(contract, r), LaurentQ::monomial(r));
    EXPECT_EQ(fake_degree(reversed, r), LaurentQ::monomial(r == 0 ? 0 : m - r));
  }
}

TEST(Invariants, FakeDegreesDihedral) {
  for (int m : {5, 6, 8}) {
    GroupData g = build_dihedral(m);
    EXPECT_EQ(fake_degree(g, g.irrep_index("triv")), LaurentQ::monomial(0));
    EXPECT_EQ(fake_degree(g, g.irrep_index("sgn")), LaurentQ::monomial(m));
    for (int i = 1; i <= (m - 1) / 2; ++i)
      EXPECT_EQ(fake_degree(g, g.irrep_index("phi_" + std::to_string(i))),
                LaurentQ::monomial(i) + LaurentQ::monomial(m - i));
    if (m % 2 == 0) {
      EXPECT_EQ(fake_degree(g, g.irrep_index("eps1")), LaurentQ::monomial(m / 2));
      EXPECT_EQ(fake_degree(g, g.irrep_index("eps2")), LaurentQ::monomial(m / 2));
    }
  }
}

TEST(Invariants, MolienAgreesWithTraces) {
  std::vector<GroupData> gs;
  for (int m = 2; m <= 10; ++m) {
    gs.push_back(build_cyclic(m, DualAction::contract));
    gs.push_back(build_cyclic(m, DualAction::paper_cyclic));
    if (m >= 5) gs.push_back(build_dihedral(m));
  }
  for (const auto& g : gs) {
    CoinvariantBasis cb = coinvariant_basis(g);
    Rat total(0);
    for (int i = 0; i < g.irrep_count(); ++i) {
      LaurentQ f = fake_degree(g, i);
      EXPECT_EQ(f, fake_degree_from_traces(g, cb, i)) << g.name() << " " << g.irreps[i].label;
      total += f.at_one() * Rat(g.irreps[i].dim);
    }
    EXPECT_EQ(total, Rat(g.order())) << g.name();
  }
}

TEST(Invariants, YSideCoinvariants) {
  GroupData g = build_dihedral(5);
  CoinvariantBasis cb = coinvariant_basis(g, PolynomialSide::h);
  EXPECT_EQ(cb.size(), 10);
  EXPECT_EQ(cb.top_degree, 5);
}

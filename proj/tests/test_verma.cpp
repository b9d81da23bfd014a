#include <gtest/gtest.h>

#include "rrca/verma.hpp"

using namespace rrca;

TEST(Verma, CyclicRelationsGeneric) {
  for (auto mode : {DualAction::contract, DualAction::paper_cyclic}) {
    GroupData g = build_cyclic(4, mode);
    for (int r = 0; r < 4; ++r) {
      auto v = build_generic_verma(g, r);
      RelationReport rep = verify_relations(g, v);
      EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
    }
  }
}

TEST(Verma, DihedralRelationsAtPoint) {
  for (int m : {5, 6}) {
    GroupData g = build_dihedral(m);
    ParameterPoint p = generic_sample(g);
    for (int i = 0; i < g.irrep_count(); ++i) {
      auto v = build_verma(g, i, p);
      RelationReport rep = verify_relations(g, v);
      EXPECT_TRUE(rep.ok()) << m << " " << i << " " << (rep.failures.empty() ? "" : rep.failures[0]);
      Mat<Cyc> eu = euler_matrix(g, v);
      Cyc omega = euler_scalar(g, i, v.c);
      EXPECT_TRUE(matrices_equal<Cyc>(eu, Mat<Cyc>(Mat<Cyc>::Identity(v.dim(), v.dim()) * omega)));
    }
  }
}

TEST(Verma, CorruptedModuleIsRejected) {
  GroupData g = build_dihedral(5);
  auto v = build_verma(g, g.irrep_index("phi_1"), generic_sample(g));
  v.y[0](0, 2) += Cyc(1);
  EXPECT_FALSE(verify_relations(g, v).ok());
}

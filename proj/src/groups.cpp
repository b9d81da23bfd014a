#include "rrca/groups.hpp"

#include <algorithm>

namespace rrca {

namespace {

Mat<Cyc> scalar_matrix(const Cyc& c) {
  Mat<Cyc> m(1, 1);
  m(0, 0) = c;
  return m;
}

Mat<Cyc> dihedral_rep(int m, int i, const GroupElement& e) {
  Mat<Cyc> rot = Mat<Cyc>::Zero(2, 2);
  rot(0, 0) = Cyc::zeta(m, static_cast<long>(i) * e.rotation);
  rot(1, 1) = Cyc::zeta(m, -static_cast<long>(i) * e.rotation);
  if (!e.flip) return rot;
  Mat<Cyc> sw = Mat<Cyc>::Zero(2, 2);
  sw(0, 1) = Cyc(1);
  sw(1, 0) = Cyc(1);
  return multiply<Cyc>(rot, sw);
}

void finish(GroupData& g) {
  const int n = g.order();
  for (const auto& h : g.h_matrices) g.hstar_matrices.push_back(Mat<Cyc>(inverse_matrix<Cyc>(h).transpose()));
  g.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.class_of[a] >= 0) continue;
    std::vector<int> cls;
    for (int b = 0; b < n; ++b) {
      int conj = g.multiply(g.multiply(b, a), g.inverse(b));
      if (std::find(cls.begin(), cls.end(), conj) == cls.end()) cls.push_back(conj);
    }
    std::sort(cls.begin(), cls.end());
    for (int c : cls) g.class_of[c] = static_cast<int>(g.classes.size());
    g.classes.push_back(cls);
  }
  for (int a = 0; a < n; ++a) {
    const Mat<Cyc>& h = g.h_matrices[a];
    Mat<Cyc> one_minus = Mat<Cyc>::Identity(g.rank, g.rank) - h;
    if (rank<Cyc>(one_minus) != 1) continue;
    Mat<Cyc> one_minus_star = Mat<Cyc>::Identity(g.rank, g.rank) - g.hstar_matrices[a];
    Reflection r;
    r.element = a;
    Mat<Cyc> cb = column_basis<Cyc>(one_minus);
    Mat<Cyc> rb = column_basis<Cyc>(one_minus_star);
    r.coroot = cb.col(0);
    r.root = rb.col(0);
    // det(h) is the nontrivial eigenvalue since the other one is 1.
    r.eigenvalue = g.rank == 1 ? h(0, 0) : h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
    g.reflections.push_back(r);
  }
}

}  // namespace

int GroupData::multiply(int a, int b) const {
  const GroupElement& x = elements[a];
  const GroupElement& y = elements[b];
  GroupElement z;
  if (family == GroupFamily::cyclic) {
    z.rotation = (x.rotation + y.rotation) % m;
  } else {
    int rot = x.flip ? x.rotation - y.rotation : x.rotation + y.rotation;
    z.rotation = ((rot % m) + m) % m;
    z.flip = x.flip ^ y.flip;
  }
  return find(z);
}

int GroupData::inverse(int a) const {
  const GroupElement& x = elements[a];
  if (x.flip) return a;
  return find(GroupElement{(m - x.rotation) % m, 0});
}

int GroupData::find(const GroupElement& e) const {
  if (family == GroupFamily::cyclic) return e.rotation;
  return e.flip * m + e.rotation;
}

int GroupData::irrep_index(std::string_view label) const {
  for (int i = 0; i < irrep_count(); ++i)
    if (irreps[i].label == label) return i;
  throw MathError("unknown irreducible representation '" + std::string(label) + "'");
}

Cyc GroupData::character(int irrep, int element) const { return trace<Cyc>(irreps[irrep].matrices[element]); }

int GroupData::dual_irrep(int irrep) const {
  for (int j = 0; j < irrep_count(); ++j) {
    bool same = true;
    for (const auto& cls : classes)
      if (!(character(j, cls[0]) == character(irrep, cls[0]).conj())) {
        same = false;
        break;
      }
    if (same) return j;
  }
  throw MathError("dual representation not found");
}

std::vector<Cyc> GroupData::decompose(const std::vector<Cyc>& class_values) const {
  std::vector<Cyc> out;
  Rat inv_order(1, order());
  for (int i = 0; i < irrep_count(); ++i) {
    Cyc acc(0);
    for (std::size_t c = 0; c < classes.size(); ++c)
      acc += Cyc(static_cast<int>(classes[c].size())) * class_values[c] * character(i, classes[c][0]).conj();
    out.push_back(acc * Cyc(inv_order));
  }
  return out;
}

Cyc GroupData::tensor_multiplicity(int mu, int nu, int eta) const {
  Cyc acc(0);
  for (const auto& cls : classes) {
    int w = cls[0];
    acc += Cyc(static_cast<int>(cls.size())) * character(mu, w) * character(nu, w) * character(eta, w).conj();
  }
  return acc * Cyc(Rat(1, order()));
}

Mat<Cyc> GroupData::character_table() const {
  Mat<Cyc> t(irrep_count(), static_cast<Eigen::Index>(classes.size()));
  for (int i = 0; i < irrep_count(); ++i)
    for (std::size_t c = 0; c < classes.size(); ++c) t(i, c) = character(i, classes[c][0]);
  return t;
}

std::string GroupData::name() const {
  return (family == GroupFamily::cyclic ? "C_" : "I_2(") + std::to_string(m) +
         (family == GroupFamily::cyclic ? "" : ")");
}

VarNames cyclic_parameter_names(int m) {
  std::vector<std::string> names;
  for (int i = 1; i < m; ++i) names.push_back("k" + std::to_string(i));
  return make_var_names(std::move(names));
}

GroupData build_cyclic(int m, DualAction action) {
  if (m < 2) throw MathError("cyclic group order outside supported range");
  if (m - 1 > kMaxVars) throw MathError("cyclic group order outside supported range");
  GroupData g;
  g.family = GroupFamily::cyclic;
  g.m = m;
  g.dual_action = action;
  g.rank = 1;
  const int sign = action == DualAction::contract ? 1 : -1;
  for (int a = 0; a < m; ++a) {
    g.elements.push_back(GroupElement{a, 0});
    g.h_matrices.push_back(scalar_matrix(Cyc::zeta(m, sign * a)));
    g.words.push_back(std::vector<int>(a, 1));
  }
  g.generators = {1};
  for (int r = 0; r < m; ++r) {
    Irrep ir;
    ir.label = "rho_" + std::to_string(r);
    ir.dim = 1;
    for (int a = 0; a < m; ++a) ir.matrices.push_back(scalar_matrix(Cyc::zeta(m, static_cast<long>(r) * a)));
    g.irreps.push_back(std::move(ir));
  }
  finish(g);
  g.parameter_names = cyclic_parameter_names(m);
  g.reflection_class_count = m - 1;
  // c(w^q) = -sum_j zeta^(qj) (k_{j+1} - k_j), indices mod m, k_0 = 0.
  auto k = [&](int j) -> ParamPoly {
    j = ((j % m) + m) % m;
    return j == 0 ? ParamPoly(0) : ParamPoly::variable(g.parameter_names, j - 1);
  };
  for (auto& r : g.reflections) {
    int q = g.elements[r.element].rotation;
    r.parameter_class = q - 1;
    ParamPoly c;
    for (int j = 0; j < m; ++j) c -= ParamPoly(Cyc::zeta(m, static_cast<long>(q) * j)) * (k(j + 1) - k(j));
    g.reflection_parameter.push_back(c);
  }
  return g;
}

GroupData build_dihedral(int m) {
  if (m < 5) throw MathError("dihedral order m = " + std::to_string(m) + " outside supported range (m >= 5)");
  if (m > 60) throw MathError("dihedral order m = " + std::to_string(m) + " outside supported range");
  GroupData g;
  g.family = GroupFamily::dihedral;
  g.m = m;
  g.rank = 2;
  for (int f = 0; f < 2; ++f)
    for (int l = 0; l < m; ++l) {
      GroupElement e{l, f};
      g.elements.push_back(e);
      g.h_matrices.push_back(dihedral_rep(m, 1, e));
      std::vector<int> word(l, 1);
      if (f) word.push_back(m);
      g.words.push_back(word);
    }
  // generator 0 is r, generator 1 is s
  g.generators = {1, m};
  auto linear = [&](const std::string& label, int on_r, int on_s) {
    Irrep ir;
    ir.label = label;
    for (const auto& e : g.elements) {
      int v = (e.rotation % 2 == 1 && on_r < 0 ? -1 : 1) * (e.flip && on_s < 0 ? -1 : 1);
      ir.matrices.push_back(scalar_matrix(Cyc(v)));
    }
    g.irreps.push_back(std::move(ir));
  };
  linear("triv", 1, 1);
  linear("sgn", 1, -1);
  if (m % 2 == 0) {
    linear("eps1", -1, 1);
    linear("eps2", -1, -1);
  }
  for (int i = 1; i <= (m - 1) / 2; ++i) {
    Irrep ir;
    ir.label = "phi_" + std::to_string(i);
    ir.dim = 2;
    for (const auto& e : g.elements) ir.matrices.push_back(dihedral_rep(m, i, e));
    g.irreps.push_back(std::move(ir));
  }
  finish(g);
  if (m % 2 == 1) {
    g.parameter_names = make_var_names({"a"});
    g.reflection_class_count = 1;
    for (auto& r : g.reflections) {
      r.parameter_class = 0;
      g.reflection_parameter.push_back(ParamPoly::variable(g.parameter_names, 0));
    }
  } else {
    g.parameter_names = make_var_names({"a", "b"});
    g.reflection_class_count = 2;
    for (auto& r : g.reflections) {
      bool s_class = g.elements[r.element].rotation % 2 == 0;
      r.parameter_class = s_class ? 0 : 1;
      g.reflection_parameter.push_back(ParamPoly::variable(g.parameter_names, s_class ? 1 : 0));
    }
  }
  return g;
}

Cyc cherednik_coefficient(const GroupData& g, const Reflection& s, int y_index, int x_index) {
  if (y_index < 0 || y_index >= g.rank || x_index < 0 || x_index >= g.rank)
    throw MathError("basis index out of range");
  Cyc pairing(0);
  for (int i = 0; i < g.rank; ++i) pairing += s.coroot(i) * s.root(i);
  return s.coroot(x_index) * s.root(y_index) / pairing;
}

}  // namespace rrca

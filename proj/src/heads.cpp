#include "rrca/heads.hpp"

#include "rrca/exact/ratfunc.hpp"

namespace rrca {

Mat<Cyc> radical(const VermaModule<Cyc>& v) {
  const int n = v.dim();
  std::vector<int> positive;
  for (int i = 0; i < n; ++i)
    if (v.degree[i] > 0) positive.push_back(i);
  Mat<Cyc> basis = Mat<Cyc>::Zero(n, static_cast<Eigen::Index>(positive.size()));
  for (std::size_t j = 0; j < positive.size(); ++j) basis(positive[j], j) = Cyc(1);

  std::vector<const Mat<Cyc>*> gens;
  for (const auto& m : v.x) gens.push_back(&m);
  for (const auto& m : v.y) gens.push_back(&m);
  // group generators: every element matrix is stored, so use all non-identity ones cheaply
  for (std::size_t e = 1; e < v.w.size(); ++e) gens.push_back(&v.w[e]);

  while (basis.cols() > 0) {
    Mat<Cyc> ann = annihilator<Cyc>(basis, n);
    Mat<Cyc> stacked(ann.rows() * static_cast<Eigen::Index>(gens.size()), basis.cols());
    for (std::size_t k = 0; k < gens.size(); ++k)
      stacked.middleRows(k * ann.rows(), ann.rows()) = multiply<Cyc>(ann, multiply<Cyc>(*gens[k], basis));
    Mat<Cyc> ker = kernel<Cyc>(stacked);
    if (ker.cols() == basis.cols()) break;
    basis = column_basis<Cyc>(multiply<Cyc>(basis, ker));
  }
  return basis;
}

Mat<ParamPoly> radical(const VermaModule<ParamPoly>&) { throw MathError("specialize parameters first"); }

namespace {

// Column basis of a subspace together with rows on which it restricts to the identity.
struct PivotedBasis {
  Mat<Cyc> basis;
  std::vector<int> pivot_rows;
};

PivotedBasis pivoted(const Mat<Cyc>& cols) {
  Rref<Cyc> r = rref<Cyc>(Mat<Cyc>(cols.transpose()));
  return {r.reduced.topRows(r.rank()).transpose(), r.pivots};
}

}  // namespace

SimpleModuleReport simple_report(const GroupData& g, const VermaModule<Cyc>& v) {
  SimpleModuleReport rep;
  rep.irrep = v.irrep;
  rep.verma_dim = v.dim();
  rep.radical_basis = radical(v);
  rep.dimension = v.dim() - static_cast<int>(rep.radical_basis.cols());
  int top = 0;
  for (int d : v.degree) top = std::max(top, d);
  std::vector<std::vector<Cyc>> traces(top + 1, std::vector<Cyc>(g.classes.size(), Cyc(0)));
  for (int d = 0; d <= top; ++d) {
    Mat<Cyc> restricted = rep.radical_basis;
    for (int i = 0; i < v.dim(); ++i)
      if (v.degree[i] != d) restricted.row(i).setZero();
    PivotedBasis rd = pivoted(restricted);
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      const Mat<Cyc>& w = v.w[g.classes[c][0]];
      Cyc t(0);
      for (int i = 0; i < v.dim(); ++i)
        if (v.degree[i] == d) t += w(i, i);
      if (rd.basis.cols() > 0) {
        Mat<Cyc> img = multiply<Cyc>(w, rd.basis);
        for (std::size_t k = 0; k < rd.pivot_rows.size(); ++k) t -= img(rd.pivot_rows[k], k);
      }
      traces[d][c] = t;
    }
  }
  rep.character = character_from_traces(g, traces);
  rep.poincare = rep.character.poincare(g);
  if (rep.poincare.at_one() != Rat(rep.dimension)) throw MathError("head character does not match head dimension");
  rep.smooth = rep.dimension == g.order();
  rep.rigid = rep.dimension == g.irreps[v.irrep].dim;
  return rep;
}

SimpleModuleReport simple_report(const GroupData& g, int irrep, const ParameterPoint& p) {
  return simple_report(g, build_verma(g, irrep, p));
}

std::vector<SimpleModuleReport> all_simple_reports(const GroupData& g, const ParameterPoint& p) {
  CoinvariantBasis cb = coinvariant_basis(g);
  std::vector<Cyc> c = reflection_values(g, p);
  std::vector<SimpleModuleReport> out;
  for (int i = 0; i < g.irrep_count(); ++i) out.push_back(simple_report(g, build_verma<Cyc>(g, cb, i, c)));
  return out;
}

template <class S>
S cyclic_gamma(int m, int r, int l, const std::vector<S>& k) {
  auto at = [&](int j) -> S {
    j = ((j % m) + m) % m;
    return j == 0 ? S(0) : k[j - 1];
  };
  return S(Cyc(m)) * (at(m + 1 - r) - at(m + 1 - r - l));
}

template Cyc cyclic_gamma<Cyc>(int, int, int, const std::vector<Cyc>&);
template ParamPoly cyclic_gamma<ParamPoly>(int, int, int, const std::vector<ParamPoly>&);

int cyclic_epsilon(int m, int r, const std::vector<Cyc>& k) {
  if (static_cast<int>(k.size()) != m - 1) throw MathError("parameter/family mismatch");
  for (int l = 1; l < m; ++l)
    if (cyclic_gamma<Cyc>(m, r, l, k).is_zero()) return l;
  return m;
}

int cyclic_epsilon_generic(int m, int r) {
  VarNames names = cyclic_parameter_names(m);
  std::vector<ParamPoly> k;
  for (int i = 0; i < m - 1; ++i) k.push_back(ParamPoly::variable(names, i));
  for (int l = 1; l < m; ++l)
    if (cyclic_gamma<ParamPoly>(m, r, l, k).is_zero()) return l;
  return m;
}

LaurentQ smooth_poincare(const GroupData& g, int irrep) {
  int dual = g.dual_irrep(irrep);
  LaurentQ f = fake_degree(g, dual);
  int b = trailing_degree(f);
  LaurentQ num = LaurentQ(g.irreps[irrep].dim) * LaurentQ::monomial(b) * coinvariant_poincare(g);
  auto [q, r] = divmod(num.to_upoly(), f.to_upoly());
  if (!r.is_zero())
    throw SupersingularError(g.irreps[irrep].label + " is supersingular: fake degree of the dual does not divide");
  return LaurentQ::from_upoly(q);
}

bool is_supersingular(const GroupData& g, int irrep) {
  try {
    smooth_poincare(g, irrep);
    return false;
  } catch (const SupersingularError&) {
    return true;
  }
}

}  // namespace rrca

#include "rrca/verma.hpp"

#include <sstream>

namespace rrca {

LaurentQ GradedWCharacter::poincare(const GroupData& g) const {
  LaurentQ p;
  for (int i = 0; i < g.irrep_count(); ++i) p += mult[i] * LaurentQ(g.irreps[i].dim);
  return p;
}

int GradedWCharacter::dimension(const GroupData& g) const {
  Rat d = poincare(g).at_one();
  return static_cast<int>(d.numerator().get_si());
}

std::string GradedWCharacter::str(const GroupData& g) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < g.irrep_count(); ++i) {
    const LaurentQ& l = mult[i];
    if (l.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (l == LaurentQ(1)) {
      os << g.irreps[i].label;
    } else if (l.terms().size() == 1 && l.terms().begin()->second.is_one()) {
      os << l.str() << "*" << g.irreps[i].label;
    } else {
      os << "(" << l.str() << ")*" << g.irreps[i].label;
    }
  }
  return first ? "0" : os.str();
}

std::vector<ParamPoly> generic_reflection_values(const GroupData& g) { return g.reflection_parameter; }

template <class S>
VermaModule<S> build_verma(const GroupData& g, const CoinvariantBasis& cb, int irrep, const std::vector<S>& c) {
  if (irrep < 0 || irrep >= g.irrep_count()) throw MathError("unknown irreducible representation");
  if (c.size() != g.reflections.size()) throw MathError("parameter/family mismatch");
  VermaModule<S> v;
  v.irrep = irrep;
  v.c = c;
  const Irrep& lam = g.irreps[irrep];
  const int d = lam.dim;
  v.lambda_dim = d;
  const int n = cb.size() * d;
  for (int k = 0; k < cb.size(); ++k)
    for (int a = 0; a < d; ++a) v.degree.push_back(cb.degrees[k]);

  Mat<Rat> id_rat = Mat<Rat>::Identity(d, d);
  for (int i = 0; i < g.rank; ++i) v.x.push_back(kron<Rat>(cb.multiplication[i], id_rat).template cast<S>());
  for (int e = 0; e < g.order(); ++e) v.w.push_back(kron<Cyc>(cb.action[e], lam.matrices[e]).template cast<S>());

  // coefficient (y_j, x_i)_s c(s) for every reflection
  std::vector<std::vector<std::vector<S>>> coef(g.rank, std::vector<std::vector<S>>(g.rank));
  for (int j = 0; j < g.rank; ++j)
    for (int i = 0; i < g.rank; ++i)
      for (std::size_t s = 0; s < g.reflections.size(); ++s)
        coef[j][i].push_back(S(cherednik_coefficient(g, g.reflections[s], j, i)) * c[s]);

  for (int j = 0; j < g.rank; ++j) v.y.push_back(Mat<S>::Zero(n, n));
  for (int k = 0; k < cb.size(); ++k) {
    const Monomial& mono = cb.monomials[k];
    if (mono.degree() == 0) continue;
    int var = -1, parent = -1;
    for (int i = 0; i < g.rank && parent < 0; ++i) {
      if (mono[i] == 0) continue;
      Monomial p = Monomial::variable(i).quotient_of(mono);
      parent = cb.index_of(p);
      var = i;
    }
    if (parent < 0) throw MathError("coinvariant basis is not closed under division");
    for (int a = 0; a < d; ++a) {
      const int col = k * d + a, pcol = parent * d + a;
      for (int j = 0; j < g.rank; ++j) {
        Vec<S> out = Vec<S>::Zero(n);
        // x_var (y_j . (f (x) v))
        for (int r = 0; r < n; ++r) {
          const S& yv = v.y[j](r, pcol);
          if (detail::zero_adl(yv)) continue;
          for (int t = 0; t < n; ++t)
            if (!detail::zero_adl(v.x[var](t, r))) out(t) += v.x[var](t, r) * yv;
        }
        // sum_s (y_j, x_var)_s c(s) s . (f (x) v)
        for (std::size_t s = 0; s < g.reflections.size(); ++s) {
          const S& f = coef[j][var][s];
          if (detail::zero_adl(f)) continue;
          const Mat<S>& ws = v.w[g.reflections[s].element];
          for (int t = 0; t < n; ++t)
            if (!detail::zero_adl(ws(t, pcol))) out(t) += f * ws(t, pcol);
        }
        v.y[j].col(col) = out;
      }
    }
  }
  return v;
}

template VermaModule<Cyc> build_verma<Cyc>(const GroupData&, const CoinvariantBasis&, int, const std::vector<Cyc>&);
template VermaModule<ParamPoly> build_verma<ParamPoly>(const GroupData&, const CoinvariantBasis&, int,
                                                       const std::vector<ParamPoly>&);

VermaModule<Cyc> build_verma(const GroupData& g, int irrep, const ParameterPoint& p) {
  return build_verma<Cyc>(g, coinvariant_basis(g), irrep, reflection_values(g, p));
}

VermaModule<ParamPoly> build_generic_verma(const GroupData& g, int irrep) {
  return build_verma<ParamPoly>(g, coinvariant_basis(g), irrep, generic_reflection_values(g));
}

namespace {

template <class S>
void expect_zero(RelationReport& rep, const Mat<S>& m, const std::string& what) {
  ++rep.checked;
  if (!is_zero_matrix<S>(m)) rep.failures.push_back(what);
}

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  return multiply<S>(a, b) - multiply<S>(b, a);
}

template <class S>
Mat<S> eval_invariant(const LexPoly<Rat>& f, const std::vector<Mat<S>>& ops, int n) {
  Mat<S> acc = Mat<S>::Zero(n, n);
  for (const auto& [mono, c] : f.terms()) {
    Mat<S> t = Mat<S>::Identity(n, n);
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (int e = 0; e < mono[static_cast<int>(i)]; ++e) t = multiply<S>(t, ops[i]);
    acc += t * S(c);
  }
  return acc;
}

}  // namespace

template <class S>
RelationReport verify_relations(const GroupData& g, const VermaModule<S>& v) {
  RelationReport rep;
  const int n = v.dim();
  const Mat<S> id = Mat<S>::Identity(n, n);
  for (int i = 0; i < g.rank; ++i)
    for (int j = i + 1; j < g.rank; ++j) {
      expect_zero<S>(rep, commutator<S>(v.x[i], v.x[j]), "[x" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) + "] != 0");
      expect_zero<S>(rep, commutator<S>(v.y[i], v.y[j]), "[y" + std::to_string(i + 1) + ", y" + std::to_string(j + 1) + "] != 0");
    }
  for (int j = 0; j < g.rank; ++j)
    for (int i = 0; i < g.rank; ++i) {
      Mat<S> rhs = Mat<S>::Zero(n, n);
      for (std::size_t s = 0; s < g.reflections.size(); ++s)
        rhs += v.w[g.reflections[s].element] * (S(cherednik_coefficient(g, g.reflections[s], j, i)) * v.c[s]);
      expect_zero<S>(rep, Mat<S>(commutator<S>(v.y[j], v.x[i]) - rhs),
                     "[y" + std::to_string(j + 1) + ", x" + std::to_string(i + 1) + "] != sum_s (y,x)_s c(s) s");
    }
  // group presentation and word consistency
  for (int e = 0; e < g.order(); ++e) {
    Mat<S> prod = id;
    for (int gen : g.words[e]) prod = multiply<S>(prod, v.w[gen]);
    expect_zero<S>(rep, Mat<S>(prod - v.w[e]), "group element " + std::to_string(e) + " differs from its word");
  }
  if (g.family == GroupFamily::cyclic) {
    expect_zero<S>(rep, Mat<S>(matrix_power<S>(v.w[1], g.m) - id), "w^m != 1");
  } else {
    const Mat<S>& r = v.w[g.generators[0]];
    const Mat<S>& s = v.w[g.generators[1]];
    expect_zero<S>(rep, Mat<S>(matrix_power<S>(r, g.m) - id), "r^m != 1");
    expect_zero<S>(rep, Mat<S>(multiply<S>(s, s) - id), "s^2 != 1");
    expect_zero<S>(rep, Mat<S>(multiply<S>(multiply<S>(s, r), s) - v.w[g.inverse(g.generators[0])]), "s r s != r^-1");
  }
  // w x_i = (w.x_i) w and w y_j = (w.y_j) w for the generators
  for (int gen : g.generators) {
    const Mat<S>& wg = v.w[gen];
    for (int i = 0; i < g.rank; ++i) {
      Mat<S> img_x = Mat<S>::Zero(n, n), img_y = Mat<S>::Zero(n, n);
      for (int k = 0; k < g.rank; ++k) {
        img_x += v.x[k] * S(g.hstar_matrices[gen](k, i));
        img_y += v.y[k] * S(g.h_matrices[gen](k, i));
      }
      expect_zero<S>(rep, Mat<S>(multiply<S>(wg, v.x[i]) - multiply<S>(img_x, wg)),
                     "generator " + std::to_string(gen) + " does not intertwine x" + std::to_string(i + 1));
      expect_zero<S>(rep, Mat<S>(multiply<S>(wg, v.y[i]) - multiply<S>(img_y, wg)),
                     "generator " + std::to_string(gen) + " does not intertwine y" + std::to_string(i + 1));
    }
  }
  // positive degree invariants act by zero on both sides
  for (const auto& f : fundamental_invariants(g)) {
    expect_zero<S>(rep, eval_invariant<S>(f, v.x, n), "invariant in x does not vanish");
    expect_zero<S>(rep, eval_invariant<S>(f, v.y, n), "invariant in y does not vanish");
  }
  return rep;
}

template RelationReport verify_relations<Cyc>(const GroupData&, const VermaModule<Cyc>&);
template RelationReport verify_relations<ParamPoly>(const GroupData&, const VermaModule<ParamPoly>&);

template <class S>
S euler_scalar(const GroupData& g, int irrep, const std::vector<S>& c) {
  S acc(0);
  for (std::size_t s = 0; s < g.reflections.size(); ++s) {
    const Reflection& r = g.reflections[s];
    Cyc f = r.eigenvalue / (r.eigenvalue - Cyc(1));
    acc += S(f * g.character(irrep, r.element)) * c[s];
  }
  return acc * S(Cyc(Rat(1, g.irreps[irrep].dim)));
}

template Cyc euler_scalar<Cyc>(const GroupData&, int, const std::vector<Cyc>&);
template ParamPoly euler_scalar<ParamPoly>(const GroupData&, int, const std::vector<ParamPoly>&);

template <class S>
Mat<S> euler_matrix(const GroupData& g, const VermaModule<S>& v) {
  const int n = v.dim();
  Mat<S> eu = Mat<S>::Zero(n, n);
  for (int i = 0; i < g.rank; ++i) eu += multiply<S>(v.x[i], v.y[i]);
  for (std::size_t s = 0; s < g.reflections.size(); ++s) {
    const Reflection& r = g.reflections[s];
    S f = S(r.eigenvalue / (r.eigenvalue - Cyc(1))) * v.c[s];
    eu += v.w[r.element] * f;
  }
  return eu;
}

template Mat<Cyc> euler_matrix<Cyc>(const GroupData&, const VermaModule<Cyc>&);
template Mat<ParamPoly> euler_matrix<ParamPoly>(const GroupData&, const VermaModule<ParamPoly>&);

GradedWCharacter verma_graded_character(const GroupData& g, int irrep) {
  GradedWCharacter ch;
  ch.mult.assign(g.irrep_count(), LaurentQ());
  for (int mu = 0; mu < g.irrep_count(); ++mu) {
    LaurentQ f = fake_degree(g, mu);
    int mu_dual = g.dual_irrep(mu);
    for (int eta = 0; eta < g.irrep_count(); ++eta) {
      Cyc t = g.tensor_multiplicity(mu_dual, irrep, eta);
      if (!t.is_zero()) ch.mult[eta] += f * LaurentQ(t.rational_value());
    }
  }
  return ch;
}

GradedWCharacter character_from_traces(const GroupData& g, const std::vector<std::vector<Cyc>>& traces_by_degree) {
  GradedWCharacter ch;
  ch.mult.assign(g.irrep_count(), LaurentQ());
  for (std::size_t d = 0; d < traces_by_degree.size(); ++d) {
    std::vector<Cyc> m = g.decompose(traces_by_degree[d]);
    for (int i = 0; i < g.irrep_count(); ++i) {
      if (m[i].is_zero()) continue;
      Rat r = m[i].rational_value();
      if (!r.is_integer() || r.sign() < 0) throw MathError("class function is not a character");
      ch.mult[i].add(static_cast<int>(d), r);
    }
  }
  return ch;
}

GradedWCharacter graded_character_of(const GroupData& g, const VermaModule<Cyc>& v) {
  int top = 0;
  for (int d : v.degree) top = std::max(top, d);
  std::vector<std::vector<Cyc>> traces(top + 1, std::vector<Cyc>(g.classes.size(), Cyc(0)));
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    const Mat<Cyc>& w = v.w[g.classes[c][0]];
    for (int i = 0; i < v.dim(); ++i) traces[v.degree[i]][c] += w(i, i);
  }
  return character_from_traces(g, traces);
}

}  // namespace rrca

#include "rrca/invariants.hpp"

#include <algorithm>
#include <functional>

namespace rrca {

namespace {

LexPoly<Rat> s_polynomial(const LexPoly<Rat>& f, const LexPoly<Rat>& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  LexPoly<Rat> a = f.scaled(f.leading_coeff().inverse(), f.leading_monomial().quotient_of(l));
  LexPoly<Rat> b = g.scaled(g.leading_coeff().inverse(), g.leading_monomial().quotient_of(l));
  return a - b;
}

}  // namespace

GroebnerBasis buchberger(std::vector<LexPoly<Rat>> input) {
  GroebnerBasis gb;
  for (auto& p : input)
    if (!p.is_zero()) gb.generators.push_back(std::move(p));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < gb.generators.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    LexPoly<Rat> r = normal_form(s_polynomial(gb.generators[i], gb.generators[j]), gb);
    if (r.is_zero()) continue;
    gb.generators.push_back(r.scaled(r.leading_coeff().inverse()));
    std::size_t k = gb.generators.size() - 1;
    for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }
  return gb;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  for (std::size_t j = 0; j < gb.generators.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(gb.generators[i], gb.generators[j]), gb).is_zero()) return false;
  return true;
}

std::vector<LexPoly<Rat>> fundamental_invariants(const GroupData& g) {
  const int m = g.m;
  if (g.family == GroupFamily::cyclic) return {LexPoly<Rat>::term(Rat(1), Monomial::variable(0, m))};
  Monomial xy = Monomial::variable(0) * Monomial::variable(1);
  LexPoly<Rat> top = LexPoly<Rat>::term(Rat(1), Monomial::variable(0, m));
  top.add_term(Monomial::variable(1, m), Rat(1));
  return {top, LexPoly<Rat>::term(Rat(1), xy)};
}

std::vector<int> invariant_degrees(const GroupData& g) {
  if (g.family == GroupFamily::cyclic) return {g.m};
  return {2, g.m};
}

LexPoly<Cyc> act_on_polynomial(const GroupData& g, int element, const LexPoly<Cyc>& f, PolynomialSide side) {
  const Mat<Cyc>& mat = side == PolynomialSide::h_star ? g.hstar_matrices[element] : g.h_matrices[element];
  std::vector<LexPoly<Cyc>> images;
  for (int i = 0; i < g.rank; ++i) {
    LexPoly<Cyc> img;
    for (int k = 0; k < g.rank; ++k) img.add_term(Monomial::variable(k), mat(k, i));
    images.push_back(img);
  }
  LexPoly<Cyc> out;
  for (const auto& [mono, c] : f.terms()) {
    LexPoly<Cyc> t(c);
    for (int i = 0; i < g.rank; ++i)
      for (int e = 0; e < mono[i]; ++e) t = t * images[i];
    out += t;
  }
  return out;
}

int CoinvariantBasis::index_of(const Monomial& m) const {
  for (int i = 0; i < size(); ++i)
    if (monomials[i] == m) return i;
  return -1;
}

Vec<Cyc> CoinvariantBasis::coordinates(const LexPoly<Cyc>& f) const {
  LexPoly<Cyc> nf = normal_form(f, groebner);
  Vec<Cyc> v = Vec<Cyc>::Zero(size());
  for (const auto& [mono, c] : nf.terms()) {
    int i = index_of(mono);
    if (i < 0) throw MathError("normal form left the standard monomials");
    v(i) = c;
  }
  return v;
}

CoinvariantBasis coinvariant_basis(const GroupData& g, PolynomialSide side) {
  CoinvariantBasis cb;
  cb.nvars = g.rank;
  cb.groebner = buchberger(fundamental_invariants(g));
  std::vector<int> degs = invariant_degrees(g);
  int bound = 0;
  for (int d : degs) bound += d - 1;
  std::vector<Monomial> found;
  std::function<void(int, Monomial)> walk = [&](int var, Monomial mono) {
    if (var == cb.nvars) {
      for (const auto& p : cb.groebner.generators)
        if (p.leading_monomial().divides(mono)) return;
      found.push_back(mono);
      return;
    }
    for (int e = 0; mono.degree() + e <= bound + 1; ++e) {
      Monomial next = mono;
      next.set(var, e);
      walk(var + 1, next);
    }
  };
  walk(0, Monomial());
  std::sort(found.begin(), found.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b.exponents() < a.exponents();
  });
  cb.monomials = found;
  if (cb.size() != g.order()) throw MathError("coinvariant algebra has unexpected dimension");
  for (const auto& mono : found) {
    cb.degrees.push_back(mono.degree());
    cb.top_degree = std::max(cb.top_degree, mono.degree());
  }
  for (int v = 0; v < cb.nvars; ++v) {
    Mat<Rat> mul = Mat<Rat>::Zero(cb.size(), cb.size());
    for (int j = 0; j < cb.size(); ++j) {
      LexPoly<Rat> nf = normal_form(LexPoly<Rat>::term(Rat(1), cb.monomials[j] * Monomial::variable(v)), cb.groebner);
      for (const auto& [mono, c] : nf.terms()) mul(cb.index_of(mono), j) = c;
    }
    cb.multiplication.push_back(mul);
  }
  for (int e = 0; e < g.order(); ++e) {
    Mat<Cyc> act(cb.size(), cb.size());
    for (int j = 0; j < cb.size(); ++j)
      act.col(j) = cb.coordinates(act_on_polynomial(g, e, LexPoly<Cyc>::term(Cyc(1), cb.monomials[j]), side));
    cb.action.push_back(act);
  }
  return cb;
}

LaurentQ coinvariant_poincare(const GroupData& g) {
  LaurentQ p(1);
  for (int d : invariant_degrees(g)) {
    LaurentQ f;
    for (int i = 0; i < d; ++i) f.add(i, Rat(1));
    p *= f;
  }
  return p;
}

LaurentQ fake_degree(const GroupData& g, int irrep) {
  std::vector<int> degs = invariant_degrees(g);
  int top = 0, extra = 0;
  for (int d : degs) {
    top += d - 1;
    extra += d;
  }
  const int n = top + extra;
  // sum over classes of |C| chi(w) / det(1 - q w|h*), as a truncated series.
  std::vector<Cyc> series(n + 1, Cyc(0));
  for (const auto& cls : g.classes) {
    int w = cls[0];
    const Mat<Cyc>& mat = g.hstar_matrices[w];
    std::vector<Cyc> det;
    if (g.rank == 1) {
      det = {Cyc(1), -mat(0, 0)};
    } else {
      det = {Cyc(1), -(mat(0, 0) + mat(1, 1)), mat(0, 0) * mat(1, 1) - mat(0, 1) * mat(1, 0)};
    }
    std::vector<Cyc> inv(n + 1, Cyc(0));
    inv[0] = Cyc(1);
    for (int k = 1; k <= n; ++k)
      for (std::size_t j = 1; j < det.size() && static_cast<int>(j) <= k; ++j) inv[k] -= det[j] * inv[k - j];
    Cyc weight = Cyc(static_cast<int>(cls.size())) * g.character(irrep, w);
    for (int k = 0; k <= n; ++k) series[k] += weight * inv[k];
  }
  for (int d : degs)
    for (int k = n; k >= d; --k) series[k] -= series[k - d];
  LaurentQ out;
  Rat inv_order(1, g.order());
  for (int k = 0; k <= n; ++k) {
    Cyc c = series[k] * Cyc(inv_order);
    if (c.is_zero()) continue;
    if (k > top) throw MathError("fake degree exceeds the top coinvariant degree");
    if (!c.is_rational()) throw MathError("fake degree coefficient is not rational");
    out.add(k, c.rational_value());
  }
  if (!out.has_natural_coefficients()) throw MathError("fake degree has non-natural coefficients");
  return out;
}

int trailing_degree(const LaurentQ& l) {
  if (l.is_zero()) throw MathError("trailing degree of zero");
  return l.min_exponent();
}

}  // namespace rrca

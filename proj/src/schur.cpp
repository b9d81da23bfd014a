#include "rrca/schur.hpp"

#include <random>

#include "rrca/error.hpp"
#include "rrca/exact/matrix.hpp"
#include "rrca/groups.hpp"
#include "rrca/heads.hpp"
#include "rrca/verma.hpp"

namespace rrca {

namespace {

void check_range(int m, int v, const char* what) {
  if (v < 0 || v > m - 1) throw MathError(std::string("index ") + what + " out of range");
}

template <class S>
S k_at(int m, int j, const std::vector<S>& k) {
  j = ((j % m) + m) % m;
  return j == 0 ? S(0) : k[j - 1];
}

template <class S>
S power(S base, int e) {
  S out(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

std::vector<ParamPoly> k_variables(int m) {
  VarNames names = cyclic_parameter_names(m);
  std::vector<ParamPoly> k;
  for (int i = 0; i < m - 1; ++i) k.push_back(ParamPoly::variable(names, i));
  return k;
}

}  // namespace

int symmetrizing_trace(int m, int i, int j, int q) {
  check_range(m, i, "i");
  check_range(m, j, "j");
  check_range(m, q, "q");
  return (i == m - 1 && j == m - 1 && q == 0) ? 1 : 0;
}

template <class S>
S cyclic_simple_character(int m, int r, int i, int j, int q, const std::vector<S>& k, int epsilon) {
  check_range(m, r, "r");
  check_range(m, i, "i");
  check_range(m, j, "j");
  check_range(m, q, "q");
  if (i != j) return S(0);
  const int top = std::max(epsilon, i);  // l runs over [i, top)
  S sum(0);
  const S head = k_at(m, m + 1 - r, k);
  for (int l = i; l < top && l < m; ++l) {
    S prod(Cyc::zeta(m, q * l));
    for (int t = l - i + 1; t <= l; ++t) prod = prod * (head - k_at(m, m + 1 - r - t, k));
    sum = sum + prod;
  }
  return S(Cyc(power(Rat(-m), i)) * Cyc::zeta(m, q * r)) * sum;
}

template ParamPoly cyclic_simple_character<ParamPoly>(int, int, int, int, int, const std::vector<ParamPoly>&, int);
template Cyc cyclic_simple_character<Cyc>(int, int, int, int, int, const std::vector<Cyc>&, int);

ParamPoly simple_character_cyclic(int m, int r, int i, int j, int q) {
  return cyclic_simple_character<ParamPoly>(m, r, i, j, q, k_variables(m), m);
}

Cyc simple_character_cyclic_at(int m, int r, int i, int j, int q, const std::vector<Cyc>& k) {
  return cyclic_simple_character<Cyc>(m, r, i, j, q, k, cyclic_epsilon(m, r, k));
}

template <class S>
S cyclic_schur_element(int m, int r, const std::vector<S>& k) {
  check_range(m, r, "r");
  const int head = ((m + 1 - r) % m + m) % m;
  S prod(Cyc(power(Rat(m), m) * Rat((m - 1) % 2 ? -1 : 1)));
  for (int t = 0; t < m; ++t)
    if (t != head) prod = prod * (k_at(m, head, k) - k_at(m, t, k));
  return prod;
}

template ParamPoly cyclic_schur_element<ParamPoly>(int, int, const std::vector<ParamPoly>&);
template Cyc cyclic_schur_element<Cyc>(int, int, const std::vector<Cyc>&);

SchurTable schur_elements(int m) {
  if (m < 2) throw MathError("cyclic group order must be at least 2");
  SchurTable t;
  t.m = m;
  auto k = k_variables(m);
  for (int r = 0; r < m; ++r) t.entries.push_back(cyclic_schur_element<ParamPoly>(m, r, k));
  return t;
}

CharacterTable character_table_cyclic(int m) {
  if (m < 2) throw MathError("cyclic group order must be at least 2");
  CharacterTable t;
  t.m = m;
  auto k = k_variables(m);
  for (int q = 0; q < m; ++q) t.columns.push_back("Omega Omega^* w^" + std::to_string(q));
  for (int r = 0; r < m; ++r) {
    t.rows.push_back("chi_" + std::to_string(r));
    std::vector<ParamPoly> row;
    for (int q = 0; q < m; ++q) row.push_back(cyclic_simple_character<ParamPoly>(m, r, m - 1, m - 1, q, k, m));
    t.entries.push_back(row);
  }
  return t;
}

namespace {

std::string monomial_name(int i, int j, int q) {
  return "x^" + std::to_string(i) + " y^" + std::to_string(j) + " w^" + std::to_string(q);
}

}  // namespace

IdentityReport verify_schur_identity_symbolic(int m) {
  IdentityReport rep;
  auto k = k_variables(m);
  std::vector<ParamPoly> all{ParamPoly(0)};
  all.insert(all.end(), k.begin(), k.end());
  ParamPoly vandermonde(1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) vandermonde *= all[a] - all[b];
  std::vector<ParamPoly> schur, cofactor;
  for (int r = 0; r < m; ++r) {
    schur.push_back(cyclic_schur_element<ParamPoly>(m, r, k));
    try {
      cofactor.push_back(exact_divide(vandermonde, schur.back()));
    } catch (const MathError&) {
      rep.failures.push_back("S_" + std::to_string(r) + " does not divide the Vandermonde product");
      return rep;
    }
    if (!(cofactor.back() * schur.back() == vandermonde))
      rep.failures.push_back("cofactor of S_" + std::to_string(r) + " is wrong");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int q = 0; q < m; ++q) {
        ParamPoly lhs = ParamPoly(symmetrizing_trace(m, i, j, q)) * vandermonde;
        ParamPoly rhs(0);
        for (int r = 0; r < m; ++r) rhs += cyclic_simple_character<ParamPoly>(m, r, i, j, q, k, m) * cofactor[r];
        ++rep.checked;
        if (!(lhs == rhs)) rep.failures.push_back("identity fails on " + monomial_name(i, j, q));
      }
  return rep;
}

IdentityReport verify_schur_identity_expanded(int m) {
  IdentityReport rep;
  auto k = k_variables(m);
  std::vector<ParamPoly> schur;
  for (int r = 0; r < m; ++r) schur.push_back(cyclic_schur_element<ParamPoly>(m, r, k));
  ParamPoly total(1);
  for (const auto& s : schur) total *= s;
  std::vector<ParamPoly> others;
  for (int r = 0; r < m; ++r) {
    ParamPoly p(1);
    for (int s = 0; s < m; ++s)
      if (s != r) p *= schur[s];
    others.push_back(p);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int q = 0; q < m; ++q) {
        ParamPoly rhs(0);
        for (int r = 0; r < m; ++r) rhs += cyclic_simple_character<ParamPoly>(m, r, i, j, q, k, m) * others[r];
        ++rep.checked;
        if (!(ParamPoly(symmetrizing_trace(m, i, j, q)) * total == rhs))
          rep.failures.push_back("identity fails on " + monomial_name(i, j, q));
      }
  return rep;
}

std::vector<Cyc> random_semisimple_cyclic_point(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-199, 199), den(1, 17);
  std::vector<Rat> vals{Rat(0)};
  while (static_cast<int>(vals.size()) < m) {
    Rat v(num(rng), den(rng));
    bool clash = false;
    for (const auto& u : vals) clash = clash || u == v;
    if (!clash) vals.push_back(v);
  }
  std::vector<Cyc> k;
  for (int i = 1; i < m; ++i) k.emplace_back(vals[i]);
  return k;
}

IdentityReport verify_schur_identity_at_points(int m, int count, std::uint64_t seed) {
  IdentityReport rep;
  std::mt19937_64 seeds(seed);
  for (int n = 0; n < count; ++n) {
    std::vector<Cyc> k = random_semisimple_cyclic_point(m, seeds());
    std::vector<Cyc> schur;
    Cyc total(1);
    for (int r = 0; r < m; ++r) {
      schur.push_back(cyclic_schur_element<Cyc>(m, r, k));
      total *= schur.back();
      if (cyclic_epsilon(m, r, k) != m) rep.failures.push_back("sample point is not semisimple");
    }
    for (int i = 0; i < m; ++i)
      for (int q = 0; q < m; ++q)
        for (int j = 0; j < m; ++j) {
          Cyc rhs(0);
          for (int r = 0; r < m; ++r) {
            Cyc chi = simple_character_cyclic_at(m, r, i, j, q, k);
            if (chi.is_zero()) continue;
            Cyc others(1);
            for (int s = 0; s < m; ++s)
              if (s != r) others *= schur[s];
            rhs += chi * others;
          }
          ++rep.checked;
          if (Cyc(symmetrizing_trace(m, i, j, q)) * total != rhs)
            rep.failures.push_back("identity fails on " + monomial_name(i, j, q) + " at sample " + std::to_string(n));
        }
  }
  return rep;
}

IdentityReport verify_characters_against_verma(int m) {
  IdentityReport rep;
  GroupData g = build_cyclic(m, DualAction::paper_cyclic);
  for (int r = 0; r < m; ++r) {
    VermaModule<ParamPoly> v = build_generic_verma(g, r);
    Mat<ParamPoly> xp = Mat<ParamPoly>::Identity(m, m);
    for (int i = 0; i < m; ++i) {
      Mat<ParamPoly> yp = Mat<ParamPoly>::Identity(m, m);
      for (int j = 0; j < m; ++j) {
        Mat<ParamPoly> xy = multiply<ParamPoly>(xp, yp);
        for (int q = 0; q < m; ++q) {
          ParamPoly tr = trace<ParamPoly>(multiply<ParamPoly>(xy, v.w[q]));
          ++rep.checked;
          if (!(tr == simple_character_cyclic(m, r, i, j, q)))
            rep.failures.push_back("chi_" + std::to_string(r) + " differs from the Verma trace on " + monomial_name(i, j, q));
        }
        yp = multiply<ParamPoly>(yp, v.y[0]);
      }
      xp = multiply<ParamPoly>(xp, v.x[0]);
    }
  }
  return rep;
}

int character_table_rank(int m, const std::vector<Cyc>& k) {
  Mat<Cyc> t(m, m);
  for (int r = 0; r < m; ++r)
    for (int q = 0; q < m; ++q) t(r, q) = simple_character_cyclic_at(m, r, m - 1, m - 1, q, k);
  return rank<Cyc>(t);
}

}  // namespace rrca

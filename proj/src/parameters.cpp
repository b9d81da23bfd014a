#include "rrca/parameters.hpp"

#include <random>
#include <sstream>

namespace rrca {

ParameterPoint zero_point(const GroupData& g) {
  return ParameterPoint{false, std::vector<Cyc>(g.parameter_names->size(), Cyc(0))};
}

ParameterPoint make_point(const GroupData& g, const std::vector<Rat>& values) {
  if (values.size() != g.parameter_names->size()) throw MathError("parameter/family mismatch");
  ParameterPoint p;
  for (const auto& v : values) p.values.emplace_back(v);
  return p;
}

std::vector<Cyc> reflection_values(const GroupData& g, const ParameterPoint& p) {
  if (p.generic) throw MathError("specialize parameters first");
  if (p.values.size() != g.parameter_names->size()) throw MathError("parameter/family mismatch");
  std::vector<Cyc> out;
  for (const auto& c : g.reflection_parameter) out.push_back(c.evaluate(p.values));
  return out;
}

bool is_zero_point(const GroupData& g, const ParameterPoint& p) {
  if (p.generic) return false;
  for (const auto& c : reflection_values(g, p))
    if (!c.is_zero()) return false;
  return true;
}

DihedralRegime classify_dihedral(const GroupData& g, const ParameterPoint& p) {
  if (g.family != GroupFamily::dihedral) throw MathError("regime classification needs a dihedral group");
  if (p.generic) return DihedralRegime::generic;
  if (g.m % 2 == 1) return p.values[0].is_zero() ? DihedralRegime::zero : DihedralRegime::generic;
  const Cyc& a = p.values[0];
  const Cyc& b = p.values[1];
  if (a.is_zero() && b.is_zero()) return DihedralRegime::zero;
  if (a.is_zero()) return DihedralRegime::a_zero;
  if (b.is_zero()) return DihedralRegime::b_zero;
  if (a == b) return DihedralRegime::equal;
  if (a == -b) return DihedralRegime::opposite;
  return DihedralRegime::generic;
}

std::string regime_name(DihedralRegime r) {
  switch (r) {
    case DihedralRegime::zero: return "zero";
    case DihedralRegime::generic: return "generic";
    case DihedralRegime::a_zero: return "a=0";
    case DihedralRegime::b_zero: return "b=0";
    case DihedralRegime::equal: return "a=b";
    case DihedralRegime::opposite: return "a=-b";
  }
  return "?";
}

ParameterPoint generic_sample(const GroupData& g) {
  if (g.family == GroupFamily::dihedral) {
    if (g.m % 2 == 1) return make_point(g, {Rat(1)});
    return make_point(g, {Rat(1), Rat(2)});
  }
  std::vector<Rat> k;
  for (int r = 1; r < g.m; ++r) k.emplace_back(r);
  return make_point(g, k);
}

ParameterPoint random_point_like(const GroupData& g, const ParameterPoint& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    std::uniform_int_distribution<long> num(1, 97), den(1, 13), sgn(0, 1);
    return Rat(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
  };
  if (g.family == GroupFamily::cyclic) {
    // Distinct nonzero values keep all k_i apart, so the point is semisimple.
    std::vector<Rat> k;
    while (static_cast<int>(k.size()) < g.m - 1) {
      Rat v = draw();
      bool clash = false;
      for (const auto& u : k) clash = clash || u == v;
      if (!clash) k.push_back(v);
    }
    if (!p.generic) return p;
    return make_point(g, k);
  }
  DihedralRegime regime = classify_dihedral(g, p);
  if (g.m % 2 == 1) return regime == DihedralRegime::zero ? zero_point(g) : make_point(g, {draw()});
  Rat a = draw(), b = draw();
  while (a == b || a == -b) b = draw();
  switch (regime) {
    case DihedralRegime::zero: return zero_point(g);
    case DihedralRegime::generic: return make_point(g, {a, b});
    case DihedralRegime::a_zero: return make_point(g, {Rat(0), b});
    case DihedralRegime::b_zero: return make_point(g, {a, Rat(0)});
    case DihedralRegime::equal: return make_point(g, {a, a});
    case DihedralRegime::opposite: return make_point(g, {a, -a});
  }
  return p;
}

std::string point_str(const GroupData& g, const ParameterPoint& p) {
  if (p.generic) return "generic";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i) os << ", ";
    os << (*g.parameter_names)[i] << "=" << p.values[i].str();
  }
  return os.str();
}

}  // namespace rrca

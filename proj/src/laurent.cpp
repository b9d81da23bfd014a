#include "rrca/exact/laurent.hpp"

#include <ostream>
#include <sstream>

#include "rrca/exact/parse.hpp"

namespace rrca {

void LaurentQ::add(int e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentQ LaurentQ::from_upoly(const UPolyQ& p, int shift) {
  LaurentQ l;
  for (int i = 0; i <= p.degree(); ++i) l.add(i + shift, p.coeff(i));
  return l;
}

Rat LaurentQ::at_one() const {
  Rat s(0);
  for (const auto& [e, c] : t_) s += c;
  return s;
}

bool LaurentQ::has_natural_coefficients() const {
  for (const auto& [e, c] : t_)
    if (e < 0 || !c.is_integer() || c.sign() < 0) return false;
  return true;
}

UPolyQ LaurentQ::to_upoly(int shift) const {
  if (t_.empty()) return UPolyQ();
  if (min_exponent() < shift) throw MathError("negative exponent in polynomial conversion");
  std::vector<Rat> c(max_exponent() - shift + 1, Rat(0));
  for (const auto& [e, v] : t_) c[e - shift] = v;
  return UPolyQ(std::move(c));
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add(ea + eb, ca * cb);
  return r;
}

std::string LaurentQ::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentQ LaurentQ::parse(std::string_view text) { return parse_laurent(text); }

std::ostream& operator<<(std::ostream& os, const LaurentQ& l) { return os << l.str(); }

}  // namespace rrca

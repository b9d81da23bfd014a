#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "rrca/exact/rat.hpp"
#include "rrca/exact/upoly.hpp"

namespace rrca {

// Laurent polynomial in q over Q; only nonzero coefficients are stored.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(int c) : LaurentQ(Rat(c)) {}
  LaurentQ(const Rat& c) { add(0, c); }

  static LaurentQ monomial(int exponent, const Rat& c = Rat(1)) {
    LaurentQ l;
    l.add(exponent, c);
    return l;
  }
  static LaurentQ parse(std::string_view text);
  static LaurentQ from_upoly(const UPolyQ& p, int shift = 0);

  const std::map<int, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rat coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
  }
  int min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  Rat at_one() const;
  bool has_natural_coefficients() const;  // coefficients in N, exponents >= 0
  // Requires min_exponent() >= shift; returns the polynomial q^-shift * this.
  UPolyQ to_upoly(int shift = 0) const;

  void add(int e, const Rat& c);
  std::string str() const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator-(const LaurentQ& a) { return LaurentQ() - a; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.t_ == b.t_; }

 private:
  std::map<int, Rat> t_;
};

std::ostream& operator<<(std::ostream& os, const LaurentQ& l);
inline bool is_zero(const LaurentQ& l) { return l.is_zero(); }

}  // namespace rrca

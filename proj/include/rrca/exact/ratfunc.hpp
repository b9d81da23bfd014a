#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rrca/exact/laurent.hpp"
#include "rrca/exact/upoly.hpp"

namespace rrca {

// Element of Q(q): coprime numerator and monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(int c) : RatFunc(Rat(c)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFunc(const UPolyQ& num) : num_(num), den_(Rat(1)) {}
  RatFunc(const UPolyQ& num, const UPolyQ& den);
  RatFunc(const LaurentQ& l);

  const UPolyQ& numerator() const { return num_; }
  const UPolyQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<LaurentQ> to_laurent() const;
  std::string str() const;

  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  UPolyQ num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);
inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc inverse(const RatFunc& r) { return r.inverse(); }

}  // namespace rrca
